#include "cobord/witness.hpp"

#include <algorithm>
#include <sstream>

#include "cobord/fgl.hpp"

namespace cobord {

long AMono::degree() const {
    long d = 0;
    for (const auto& [g, e] : factors) d += 2L * (g.first + g.second - 1) * e;
    return d;
}

std::string AMono::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : factors) {
        if (!first) os << "*";
        os << "a(" << g.first << "," << g.second << ")";
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

APoly APoly::constant(Int n) {
    APoly r;
    if (n != 0) r.terms_.emplace(AMono{}, std::move(n));
    return r;
}

APoly APoly::generator(int k, int j) {
    if (k < 1 || j < 1) throw DomainError("APoly::generator: indices must be >= 1");
    if (k > j) std::swap(k, j);
    APoly r;
    AMono m;
    m.factors.push_back({{k, j}, 1});
    r.terms_.emplace(std::move(m), Int(1));
    return r;
}

void APoly::add_term(AMono m, Int c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

APoly APoly::operator+(const APoly& o) const {
    APoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

APoly APoly::operator-(const APoly& o) const { return *this + (-o); }

APoly APoly::operator-() const {
    APoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

APoly APoly::operator*(const APoly& o) const {
    APoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            AMono m;
            // merge sorted factor lists
            auto ia = ma.factors.begin(), ib = mb.factors.begin();
            while (ia != ma.factors.end() || ib != mb.factors.end()) {
                if (ib == mb.factors.end() || (ia != ma.factors.end() && ia->first < ib->first)) {
                    m.factors.push_back(*ia++);
                } else if (ia == ma.factors.end() || ib->first < ia->first) {
                    m.factors.push_back(*ib++);
                } else {
                    m.factors.push_back({ia->first, ia->second + ib->second});
                    ++ia, ++ib;
                }
            }
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

APoly APoly::scaled(const Int& n) const {
    APoly r;
    if (n == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * n);
    return r;
}

GradedRational APoly::evaluate(const FGLContext& ctx) const {
    GradedRational acc;
    for (const auto& [m, c] : terms_) {
        GradedRational v = GradedRational::one();
        for (const auto& [g, e] : m.factors) {
            const GradedRational& img = ctx.fgl(g.first, g.second);
            for (int t = 0; t < e; ++t) v *= img;
        }
        acc += v.scaled(Rat(c));
    }
    return acc;
}

std::string APoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
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
