#include "cobord/target.hpp"

#include <algorithm>
#include <sstream>

namespace cobord {

long TargetMono::sym_degree() const {
    long d = 0;
    for (int e : uexp) d += -2L * e;
    for (const auto& [g, e] : dfac) d += 2L * (g.first + 1) * e;
    return d;
}

std::string TargetMono::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < uexp.size(); ++i) {
        if (uexp[i] == 0) continue;
        if (!first) os << "*";
        os << "u" << (i + 1);
        if (uexp[i] != 1) os << "^" << uexp[i];
        first = false;
    }
    for (const auto& [g, e] : dfac) {
        if (!first) os << "*";
        os << "D" << g.first << "_" << g.second;
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

bool target_mono_less(const TargetMono& a, const TargetMono& b) {
    // scan d-symbols from the greatest (l,i) downward
    auto ia = a.dfac.rbegin(), ib = b.dfac.rbegin();
    while (ia != a.dfac.rend() || ib != b.dfac.rend()) {
        if (ia == a.dfac.rend()) return true;   // b still has a greater d-symbol
        if (ib == b.dfac.rend()) return false;
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia, ++ib;
    }
    // then u_{p-1}^{-1} down to u^{-1}: higher inverse power = greater
    size_t n = std::max(a.uexp.size(), b.uexp.size());
    for (size_t r = n; r-- > 0;) {
        int ea = r < a.uexp.size() ? -a.uexp[r] : 0;
        int eb = r < b.uexp.size() ? -b.uexp[r] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

TargetPoly TargetPoly::unit(long p) {
    TargetPoly t(static_cast<int>(p) - 1);
    TargetMono m;
    m.uexp.assign(p - 1, 0);
    t.terms_.emplace(std::move(m), GradedRational::one());
    return t;
}

TargetPoly TargetPoly::u_pow(long p, int i, int e) {
    if (i < 1 || i > p - 1) throw DomainError("TargetPoly: u_i index out of range");
    TargetPoly t(static_cast<int>(p) - 1);
    TargetMono m;
    m.uexp.assign(p - 1, 0);
    m.uexp[i - 1] = e;
    t.terms_.emplace(std::move(m), GradedRational::one());
    return t;
}

TargetPoly TargetPoly::d_gen(long p, int l, int i) {
    if (l < 0) throw DomainError("TargetPoly: negative d index");
    if (l == 0) return u_pow(p, i, -1);  // d_0^{(i)} = u_i^{-1}
    if (i < 1 || i > p - 1) throw DomainError("TargetPoly: d_l^{(i)} index out of range");
    TargetPoly t(static_cast<int>(p) - 1);
    TargetMono m;
    m.uexp.assign(p - 1, 0);
    m.dfac.push_back({{l, i}, 1});
    t.terms_.emplace(std::move(m), GradedRational::one());
    return t;
}

TargetPoly TargetPoly::constant(long p, const GradedRational& c) {
    TargetPoly t(static_cast<int>(p) - 1);
    if (!c.is_zero()) {
        TargetMono m;
        m.uexp.assign(p - 1, 0);
        t.terms_.emplace(std::move(m), c);
    }
    return t;
}

void TargetPoly::add_term(TargetMono m, const GradedRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TargetPoly TargetPoly::operator+(const TargetPoly& o) const {
    if (nu_ != o.nu_ && !is_zero() && !o.is_zero())
        throw DomainError("TargetPoly: mixing different primes");
    TargetPoly r = is_zero() ? o : *this;
    if (is_zero() || o.is_zero()) return r;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

TargetPoly TargetPoly::operator-() const {
    TargetPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

TargetPoly TargetPoly::operator-(const TargetPoly& o) const { return *this + (-o); }

TargetPoly TargetPoly::operator*(const TargetPoly& o) const {
    if (nu_ != o.nu_ && !is_zero() && !o.is_zero())
        throw DomainError("TargetPoly: mixing different primes");
    TargetPoly r(nu_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            TargetMono m;
            m.uexp.assign(std::max(ma.uexp.size(), mb.uexp.size()), 0);
            for (size_t i = 0; i < ma.uexp.size(); ++i) m.uexp[i] += ma.uexp[i];
            for (size_t i = 0; i < mb.uexp.size(); ++i) m.uexp[i] += mb.uexp[i];
            auto ia = ma.dfac.begin(), ib = mb.dfac.begin();
            while (ia != ma.dfac.end() || ib != mb.dfac.end()) {
                if (ib == mb.dfac.end() || (ia != ma.dfac.end() && ia->first < ib->first))
                    m.dfac.push_back(*ia++);
                else if (ia == ma.dfac.end() || ib->first < ia->first)
                    m.dfac.push_back(*ib++);
                else {
                    m.dfac.push_back({ia->first, ia->second + ib->second});
                    ++ia, ++ib;
                }
            }
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

TargetPoly TargetPoly::scaled(const GradedRational& g) const {
    TargetPoly r(nu_);
    if (g.is_zero()) return r;
    for (const auto& [m, c] : terms_) {
        GradedRational v = c * g;
        if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
}

const TargetMono& TargetPoly::leading_monomial() const {
    if (terms_.empty()) throw DomainError("TargetPoly: leading monomial of zero");
    const TargetMono* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (target_mono_less(*best, m)) best = &m;
    }
    return *best;
}

std::string TargetPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        std::string ms = m.str();
        if (!ms.empty()) os << "*" << ms;
        first = false;
    }
    return os.str();
}

}  // namespace cobord
