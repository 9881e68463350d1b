#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cobord/errors.hpp"
#include "cobord/omega.hpp"
#include "cobord/pullback.hpp"

namespace cobord {

// Which generator alphabet an expression may use. Omega expressions range
// over q, d and MU_* coefficients; Mu expressions additionally allow u and
// eta_i, and admit the excluded family d(0,j,1) as an honest generator.
enum class ExprMode { Omega, Mu };

struct ParseError : DomainError {
    int line;
    int col;
    ParseError(const std::string& msg, int ln, int cl)
        : DomainError(std::to_string(ln) + ":" + std::to_string(cl) + ": " + msg),
          line(ln),
          col(cl) {}
};

// Syntax tree for the CLI expression grammar:
//   expr   := ["-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" uint)?
//   atom   := int | q(uint) | d(uint,uint,uint) | eta(uint) | u
//           | a(uint,uint) | "(" expr ")"
struct ExprAst {
    enum Kind { IntLit, GenQ, GenD, GenEta, GenU, GenA, Add, Sub, Mul, Pow, Neg };
    Kind kind = IntLit;
    Int value = 0;                // IntLit
    int i1 = 0, i2 = 0, i3 = 0;   // generator indices (q: i1; d: l,j,i; a: k,j)
    int expo = 0;                 // Pow
    std::vector<ExprAst> kids;
};

// Parses `text` in the given mode, validating index ranges against p.
// Throws ParseError with 1-based line/column on malformed input.
ExprAst parse_expr(const std::string& text, ExprMode mode, long p);

PresentationElement eval_omega(const ExprAst& ast, const OmegaRing& ring);
PullbackElement eval_mu(const ExprAst& ast, const PullbackRing& ring);

// Canonical coefficient form: the integrality witness as an a-polynomial
// when one exists, otherwise the rational m-representation behind an
// explicit marker (the marked form is not re-parseable).
std::string coeff_str(const GradedRational& c, const FGLContext& ctx);

// Canonical text form of a normal-form element; parse_expr round-trips it.
std::string print_element(const PresentationElement& x, const FGLContext& ctx);

}  // namespace cobord
