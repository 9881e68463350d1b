#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cobord/fgl.hpp"
#include "cobord/target.hpp"

namespace cobord {

// Ordinal index of a generator, following the proof of the Omega presentation:
// finite indices (block = -1) are x_off = q_{off+1}; block n >= 1 is the
// d-generator family x_{n*omega + off} = d_{l,off}^{(i)} with n = l(p-1)+i-1.
// Block 0 would be the excluded generator family (l,i) = (0,1).
struct Ord {
    int block;  // -1 for q-generators, >= 1 for d-blocks
    int off;

    bool finite() const { return block < 0; }
    bool operator<(const Ord& o) const { return std::tie(block, off) < std::tie(o.block, o.off); }
    bool operator==(const Ord& o) const { return block == o.block && off == o.off; }
};

// Basis element of the free MU_*-module: the unit, q_k (k >= 1), or
// d_{I,j} = d_{l_1,0}^{(i_1)} ... d_{l_{N-1},0}^{(i_{N-1})} d_{l_N,j}^{(i_N)}
// with I = {(l_1,i_1) <= ... <= (l_N,i_N)}, each pair != (0,1).
struct BasisMonomial {
    enum Kind { Unit, Q, D };
    Kind kind = Unit;
    int k = 0;                              // Q only
    std::vector<std::pair<int, int>> I;     // D only; sorted pairs (l, i)
    int j = 0;                              // D only; trailing offset

    static BasisMonomial unit();
    static BasisMonomial q(int k);
    static BasisMonomial d(std::vector<std::pair<int, int>> I, int j);

    long degree() const;  // 0 | 2(k-1) | sum 2(l_s+1) + 2j
    bool operator<(const BasisMonomial& o) const;
    bool operator==(const BasisMonomial& o) const;
    std::string str() const;  // "1", "q(2)", "d(0,0,2)*d(1,3,1)"
};

// Element of Omega^{C_p}_* in normal form: a linear combination of basis
// monomials with nonzero MU_* coefficients (rational representation;
// integrality witnesses are recoverable through the context on demand).
// Formal sums of different homogeneous degrees are allowed.
class PresentationElement {
  public:
    PresentationElement() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisMonomial, GradedRational>& terms() const { return terms_; }

    PresentationElement operator+(const PresentationElement& o) const;
    PresentationElement operator-(const PresentationElement& o) const;
    PresentationElement operator-() const;
    PresentationElement scaled(const GradedRational& c) const;
    bool operator==(const PresentationElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const PresentationElement& o) const { return !(*this == o); }

    void add_term(const BasisMonomial& m, const GradedRational& c);

    // True when all terms share one homogeneous degree (returned); the zero
    // element is homogeneous of any degree.
    std::optional<long> homogeneous_degree() const;

    std::string str() const;  // rational-coefficient debug form

  private:
    std::map<BasisMonomial, GradedRational> terms_;
};

// The presented ring Omega^{C_p}_* over a fixed context: normal forms via the
// ordinal rewriting system, the maps kappa / res / Gamma, and kernel tests.
// Immutable apart from the guarded normal-form memo; safe to share.
class OmegaRing {
  public:
    explicit OmegaRing(const FGLContext& ctx) : ctx_(ctx) {}

    const FGLContext& ctx() const { return ctx_; }
    long prime() const { return ctx_.prime(); }

    // index conversions
    Ord ord_q(int k) const;              // k >= 1
    Ord ord_d(int l, int j, int i) const;  // (l,i) != (0,1)
    int ord_l(const Ord& o) const;
    int ord_i(const Ord& o) const;
    // companion constant: c_{off+1} for finite, t_{l,off}^{(i)} for blocks
    GradedRational p_ord(const Ord& o) const;
    long ord_gen_degree(const Ord& o) const;

    // generator elements (the excluded d(0,j,1) yields zero)
    PresentationElement unit_elt() const;
    PresentationElement q_elt(int k) const;
    PresentationElement d_elt(int l, int j, int i) const;

    // Lambda: image of a generator word, expanded in the basis.
    PresentationElement normal_form(std::vector<Ord> word) const;
    PresentationElement multiply(const PresentationElement& a, const PresentationElement& b) const;

    TargetPoly kappa_gen_q(int k) const;
    TargetPoly kappa_gen_d(int l, int j, int i) const;
    TargetPoly kappa(const PresentationElement& x) const;

    GradedRational res(const PresentationElement& x) const;

    PresentationElement gamma(const PresentationElement& x) const;

    // x = c*q_1? returns c when it is (the flag distinguishes c = 0 from "no").
    std::pair<bool, GradedRational> kernel_test(const PresentationElement& x) const;

    // generator word of a basis monomial (empty for the unit)
    std::vector<Ord> word_of(const BasisMonomial& m) const;

  private:
    const FGLContext& ctx_;
    mutable std::map<std::vector<Ord>, std::map<BasisMonomial, GradedRational>> memo_;
    mutable std::mutex memo_mx_;

    std::map<BasisMonomial, GradedRational> nf_impl(const std::vector<Ord>& word) const;
    PresentationElement gamma_basis(const BasisMonomial& m) const;
};

}  // namespace cobord
