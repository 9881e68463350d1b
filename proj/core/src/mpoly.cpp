#include "cobord/mpoly.hpp"

#include <sstream>

namespace cobord {

long MMono::weight() const {
    long w = 0;
    for (size_t k = 0; k < exps.size(); ++k) w += static_cast<long>(k + 1) * exps[k];
    return w;
}

void MMono::trim() {
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

std::string MMono::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < exps.size(); ++k) {
        if (exps[k] == 0) continue;
        if (!first) os << "*";
        os << "m" << (k + 1);
        if (exps[k] > 1) os << "^" << exps[k];
        first = false;
    }
    return os.str();
}

GradedRational GradedRational::one() { return integer(1); }

GradedRational GradedRational::integer(long n) { return rational(Rat(n)); }

GradedRational GradedRational::rational(const Rat& q) {
    GradedRational r;
    if (q != 0) r.insert(MMono{}, q);
    return r;
}

GradedRational GradedRational::gen_m(int i) {
    if (i < 1) throw DomainError("gen_m: index must be >= 1");
    MMono m;
    m.exps.assign(i, 0);
    m.exps[i - 1] = 1;
    return term(std::move(m), Rat(1));
}

GradedRational GradedRational::term(MMono mono, Rat coeff) {
    GradedRational r;
    mono.trim();
    if (coeff != 0) r.insert(std::move(mono), std::move(coeff));
    return r;
}

void GradedRational::insert(MMono mono, Rat coeff) {
    long d = 2 * mono.weight();
    if (terms_.empty())
        deg_ = d;
    else if (d != deg_)
        throw DomainError("GradedRational: inhomogeneous insert (degree " + std::to_string(d) +
                          " into degree " + std::to_string(deg_) + ")");
    coeff.canonicalize();
    auto [it, fresh] = terms_.emplace(std::move(mono), std::move(coeff));
    if (!fresh) throw DomainError("GradedRational: duplicate monomial insert");
    (void)it;
}

GradedRational GradedRational::operator+(const GradedRational& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (deg_ != o.deg_)
        throw DomainError("GradedRational: adding degrees " + std::to_string(deg_) + " and " +
                          std::to_string(o.deg_));
    GradedRational r = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    if (r.terms_.empty()) r.deg_ = 0;
    return r;
}

GradedRational GradedRational::operator-(const GradedRational& o) const { return *this + (-o); }

GradedRational GradedRational::operator-() const {
    GradedRational r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

GradedRational GradedRational::operator*(const GradedRational& o) const {
    GradedRational r;
    if (is_zero() || o.is_zero()) return r;
    std::map<MMono, Rat> acc;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            MMono m;
            m.exps.assign(std::max(ma.exps.size(), mb.exps.size()), 0);
            for (size_t k = 0; k < ma.exps.size(); ++k) m.exps[k] += ma.exps[k];
            for (size_t k = 0; k < mb.exps.size(); ++k) m.exps[k] += mb.exps[k];
            acc[std::move(m)] += ca * cb;
        }
    }
    for (auto& [m, c] : acc) {
        if (c == 0) continue;
        r.insert(m, c);
    }
    return r;
}

GradedRational GradedRational::scaled(const Rat& q) const {
    GradedRational r;
    if (q == 0) return r;
    for (const auto& [m, c] : terms_) r.insert(m, c * q);
    return r;
}

bool GradedRational::is_rational_constant() const { return is_zero() || degree() == 0; }

Rat GradedRational::as_rational() const {
    if (is_zero()) return Rat(0);
    if (degree() != 0) throw DomainError("as_rational: nonzero degree");
    return terms_.begin()->second;
}

Int GradedRational::denominator_lcm() const {
    Int l = 1;
    for (const auto& [m, c] : terms_) {
        (void)m;
        Int d = c.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

std::string GradedRational::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string ms = m.str();
        if (ms.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << ms;
        }
        first = false;
    }
    return os.str();
}

}  // namespace cobord
