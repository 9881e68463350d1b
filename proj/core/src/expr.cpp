#include "cobord/expr.hpp"

#include <cctype>
#include <sstream>

namespace cobord {

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    enum TokKind { TInt, TIdent, TLParen, TRParen, TComma, TPlus, TMinus, TStar, TCaret, TEnd };
    struct Token {
        TokKind kind;
        std::string text;
        Int value;
        int line, col;
    };
    Token cur;

    explicit Lexer(const std::string& t) : text(t) { advance(); }

    [[noreturn]] void fail(const std::string& msg, int ln, int cl) const {
        throw ParseError(msg, ln, cl);
    }

    void bump() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void advance() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) bump();
        cur.line = line;
        cur.col = col;
        if (pos >= text.size()) {
            cur.kind = TEnd;
            cur.text.clear();
            return;
        }
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                digits += text[pos];
                bump();
            }
            cur.kind = TInt;
            cur.text = digits;
            cur.value = Int(digits);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
                word += text[pos];
                bump();
            }
            cur.kind = TIdent;
            cur.text = word;
            return;
        }
        bump();
        switch (c) {
            case '(': cur.kind = TLParen; return;
            case ')': cur.kind = TRParen; return;
            case ',': cur.kind = TComma; return;
            case '+': cur.kind = TPlus; return;
            case '-': cur.kind = TMinus; return;
            case '*': cur.kind = TStar; return;
            case '^': cur.kind = TCaret; return;
        }
        fail(std::string("unexpected character '") + c + "'", cur.line, cur.col);
    }
};

struct Parser {
    Lexer lex;
    ExprMode mode;
    long p;

    Parser(const std::string& text, ExprMode m, long prime) : lex(text), mode(m), p(prime) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, lex.cur.line, lex.cur.col);
    }

    void expect(Lexer::TokKind k, const char* what) {
        if (lex.cur.kind != k) fail(std::string("expected ") + what);
        lex.advance();
    }

    int uint_arg(const char* what) {
        if (lex.cur.kind != Lexer::TInt) fail(std::string("expected ") + what);
        if (lex.cur.value > 1000000) fail(std::string(what) + " out of range");
        int v = static_cast<int>(lex.cur.value.get_si());
        lex.advance();
        return v;
    }

    ExprAst parse() {
        ExprAst e = expr();
        if (lex.cur.kind != Lexer::TEnd) fail("trailing input after expression");
        return e;
    }

    ExprAst expr() {
        ExprAst e;
        if (lex.cur.kind == Lexer::TMinus) {
            lex.advance();
            e.kind = ExprAst::Neg;
            e.kids.push_back(term());
        } else {
            e = term();
        }
        while (lex.cur.kind == Lexer::TPlus || lex.cur.kind == Lexer::TMinus) {
            ExprAst node;
            node.kind = lex.cur.kind == Lexer::TPlus ? ExprAst::Add : ExprAst::Sub;
            lex.advance();
            node.kids.push_back(std::move(e));
            node.kids.push_back(term());
            e = std::move(node);
        }
        return e;
    }

    ExprAst term() {
        ExprAst e = factor();
        while (lex.cur.kind == Lexer::TStar) {
            lex.advance();
            ExprAst node;
            node.kind = ExprAst::Mul;
            node.kids.push_back(std::move(e));
            node.kids.push_back(factor());
            e = std::move(node);
        }
        return e;
    }

    ExprAst factor() {
        ExprAst e = atom();
        if (lex.cur.kind == Lexer::TCaret) {
            lex.advance();
            ExprAst node;
            node.kind = ExprAst::Pow;
            node.expo = uint_arg("exponent");
            node.kids.push_back(std::move(e));
            return node;
        }
        return e;
    }

    ExprAst atom() {
        int ln = lex.cur.line, cl = lex.cur.col;
        if (lex.cur.kind == Lexer::TInt) {
            ExprAst e;
            e.kind = ExprAst::IntLit;
            e.value = lex.cur.value;
            lex.advance();
            return e;
        }
        if (lex.cur.kind == Lexer::TLParen) {
            lex.advance();
            ExprAst e = expr();
            expect(Lexer::TRParen, "')'");
            return e;
        }
        if (lex.cur.kind != Lexer::TIdent) fail("expected an atom");
        std::string name = lex.cur.text;
        lex.advance();
        if (name == "u") {
            if (mode != ExprMode::Mu) throw ParseError("'u' is only available in MU-mode", ln, cl);
            ExprAst e;
            e.kind = ExprAst::GenU;
            return e;
        }
        expect(Lexer::TLParen, "'('");
        ExprAst e;
        if (name == "q") {
            e.kind = ExprAst::GenQ;
            e.i1 = uint_arg("q-index");
        } else if (name == "d") {
            e.kind = ExprAst::GenD;
            e.i1 = uint_arg("l-index");
            expect(Lexer::TComma, "','");
            e.i2 = uint_arg("j-index");
            expect(Lexer::TComma, "','");
            e.i3 = uint_arg("i-index");
            if (e.i3 < 1 || e.i3 > p - 1)
                throw ParseError("d-generator index i must satisfy 1 <= i <= p-1", ln, cl);
            if (mode == ExprMode::Omega && e.i1 == 0 && e.i3 == 1)
                throw ParseError(
                    "d(0,j,1) is excluded from the Omega presentation (relation (24) sets it to 0)",
                    ln, cl);
        } else if (name == "eta") {
            if (mode != ExprMode::Mu) throw ParseError("'eta' is only available in MU-mode", ln, cl);
            e.kind = ExprAst::GenEta;
            e.i1 = uint_arg("eta-index");
            if (e.i1 < 1 || e.i1 > p - 1)
                throw ParseError("eta index must satisfy 1 <= i <= p-1", ln, cl);
        } else if (name == "a") {
            e.kind = ExprAst::GenA;
            e.i1 = uint_arg("k-index");
            expect(Lexer::TComma, "','");
            e.i2 = uint_arg("j-index");
        } else {
            throw ParseError("unknown symbol '" + name + "'", ln, cl);
        }
        expect(Lexer::TRParen, "')'");
        return e;
    }
};

template <class Elt, class Ring, class GenFn>
Elt eval_generic(const ExprAst& ast, const Ring& ring, const GenFn& gen) {
    switch (ast.kind) {
        case ExprAst::IntLit:
            return ring.unit().scaled(GradedRational::rational(Rat(ast.value)));
        case ExprAst::GenA:
            return ring.unit().scaled(ring.ctx().fgl(ast.i1, ast.i2));
        case ExprAst::Add:
            return eval_generic<Elt>(ast.kids[0], ring, gen) +
                   eval_generic<Elt>(ast.kids[1], ring, gen);
        case ExprAst::Sub:
            return eval_generic<Elt>(ast.kids[0], ring, gen) -
                   eval_generic<Elt>(ast.kids[1], ring, gen);
        case ExprAst::Neg:
            return -eval_generic<Elt>(ast.kids[0], ring, gen);
        case ExprAst::Mul: {
            Elt a = eval_generic<Elt>(ast.kids[0], ring, gen);
            Elt b = eval_generic<Elt>(ast.kids[1], ring, gen);
            return gen.mul(a, b);
        }
        case ExprAst::Pow: {
            Elt base = eval_generic<Elt>(ast.kids[0], ring, gen);
            Elt acc = ring.unit();
            for (int k = 0; k < ast.expo; ++k) acc = gen.mul(acc, base);
            return acc;
        }
        default:
            return gen.generator(ast);
    }
}

}  // namespace

ExprAst parse_expr(const std::string& text, ExprMode mode, long p) {
    Parser parser(text, mode, p);
    return parser.parse();
}

PresentationElement eval_omega(const ExprAst& ast, const OmegaRing& ring) {
    struct Hooks {
        const OmegaRing& r;
        PresentationElement mul(const PresentationElement& a, const PresentationElement& b) const {
            return r.multiply(a, b);
        }
        PresentationElement generator(const ExprAst& ast) const {
            switch (ast.kind) {
                case ExprAst::GenQ:
                    return ast.i1 == 0 ? PresentationElement{} : r.q_elt(ast.i1);  // (23)
                case ExprAst::GenD:
                    return r.d_elt(ast.i1, ast.i2, ast.i3);
                default:
                    throw DomainError("generator not available in Omega-mode");
            }
        }
    } hooks{ring};
    struct RingAdapter {
        const OmegaRing& r;
        PresentationElement unit() const { return r.unit_elt(); }
        const FGLContext& ctx() const { return r.ctx(); }
    } adapter{ring};
    return eval_generic<PresentationElement>(ast, adapter, hooks);
}

PullbackElement eval_mu(const ExprAst& ast, const PullbackRing& ring) {
    struct Hooks {
        const PullbackRing& r;
        PullbackElement mul(const PullbackElement& a, const PullbackElement& b) const {
            return a * b;
        }
        PullbackElement generator(const ExprAst& ast) const {
            switch (ast.kind) {
                case ExprAst::GenQ:
                    return r.q_elt(ast.i1);
                case ExprAst::GenD:
                    return r.d_elt(ast.i1, ast.i2, ast.i3);
                case ExprAst::GenEta:
                    return r.eta_elt(ast.i1);
                case ExprAst::GenU:
                    return r.u_elt();
                default:
                    throw DomainError("unknown generator kind");
            }
        }
    } hooks{ring};
    return eval_generic<PullbackElement>(ast, ring, hooks);
}

std::string coeff_str(const GradedRational& c, const FGLContext& ctx) {
    if (auto w = ctx.integrality_witness(c)) return w->str();
    return "rational-form{" + c.str() + "}";
}

std::string print_element(const PresentationElement& x, const FGLContext& ctx) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        if (!first) os << " + ";
        os << "(" << coeff_str(c, ctx) << ")*" << m.str();
        first = false;
    }
    return os.str();
}

}  // namespace cobord
