#include "cobord/omega.hpp"

#include <algorithm>
#include <sstream>

namespace cobord {

BasisMonomial BasisMonomial::unit() { return {}; }

BasisMonomial BasisMonomial::q(int k) {
    BasisMonomial m;
    m.kind = Q;
    m.k = k;
    return m;
}

BasisMonomial BasisMonomial::d(std::vector<std::pair<int, int>> I, int j) {
    BasisMonomial m;
    m.kind = D;
    m.I = std::move(I);
    m.j = j;
    return m;
}

long BasisMonomial::degree() const {
    switch (kind) {
        case Unit: return 0;
        case Q: return 2L * (k - 1);
        case D: {
            long d = 2L * j;
            for (const auto& [l, i] : I) {
                (void)i;
                d += 2L * (l + 1);
            }
            return d;
        }
    }
    return 0;
}

bool BasisMonomial::operator<(const BasisMonomial& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == Q) return k < o.k;
    return std::tie(I, j) < std::tie(o.I, o.j);
}

bool BasisMonomial::operator==(const BasisMonomial& o) const {
    return kind == o.kind && k == o.k && I == o.I && j == o.j;
}

std::string BasisMonomial::str() const {
    if (kind == Unit) return "1";
    if (kind == Q) return "q(" + std::to_string(k) + ")";
    std::ostringstream os;
    for (size_t s = 0; s < I.size(); ++s) {
        int off = s + 1 == I.size() ? j : 0;
        if (s) os << "*";
        os << "d(" << I[s].first << "," << off << "," << I[s].second << ")";
    }
    return os.str();
}

void PresentationElement::add_term(const BasisMonomial& m, const GradedRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PresentationElement PresentationElement::operator+(const PresentationElement& o) const {
    PresentationElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

PresentationElement PresentationElement::operator-() const {
    PresentationElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

PresentationElement PresentationElement::operator-(const PresentationElement& o) const {
    return *this + (-o);
}

PresentationElement PresentationElement::scaled(const GradedRational& c) const {
    PresentationElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) {
        GradedRational w = v * c;
        if (!w.is_zero()) r.terms_.emplace(m, std::move(w));
    }
    return r;
}

std::optional<long> PresentationElement::homogeneous_degree() const {
    std::optional<long> deg;
    for (const auto& [m, c] : terms_) {
        long d = m.degree() + c.degree();
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return terms_.empty() ? std::optional<long>(0) : deg;
}

std::string PresentationElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << m.str();
        first = false;
    }
    return os.str();
}

Ord OmegaRing::ord_q(int k) const {
    if (k < 1) throw DomainError("q-generator index must be >= 1");
    return Ord{-1, k - 1};
}

Ord OmegaRing::ord_d(int l, int j, int i) const {
    long p = prime();
    if (l < 0 || j < 0 || i < 1 || i > p - 1) throw DomainError("d-generator index out of range");
    if (l == 0 && i == 1)
        throw DomainError("d(0,j,1) is the excluded generator family (it is zero in the presentation)");
    return Ord{static_cast<int>(l * (p - 1) + i - 1), j};
}

int OmegaRing::ord_l(const Ord& o) const { return o.block / static_cast<int>(prime() - 1); }

int OmegaRing::ord_i(const Ord& o) const { return o.block % static_cast<int>(prime() - 1) + 1; }

GradedRational OmegaRing::p_ord(const Ord& o) const {
    if (o.finite()) return ctx_.p_series_coeff(o.off + 1);
    return ctx_.t(ord_i(o), ord_l(o), o.off);
}

long OmegaRing::ord_gen_degree(const Ord& o) const {
    if (o.finite()) return 2L * o.off;
    return 2L * (ord_l(o) + o.off + 1);
}

PresentationElement OmegaRing::unit_elt() const {
    PresentationElement e;
    e.add_term(BasisMonomial::unit(), GradedRational::one());
    return e;
}

PresentationElement OmegaRing::q_elt(int k) const {
    if (k < 1) throw DomainError("q-generator index must be >= 1");
    PresentationElement e;
    e.add_term(BasisMonomial::q(k), GradedRational::one());
    return e;
}

PresentationElement OmegaRing::d_elt(int l, int j, int i) const {
    long p = prime();
    if (l < 0 || j < 0 || i < 1 || i > p - 1) throw DomainError("d-generator index out of range");
    if (l == 0 && i == 1) return {};  // relation (24)
    PresentationElement e;
    e.add_term(BasisMonomial::d({{l, i}}, j), GradedRational::one());
    return e;
}

std::vector<Ord> OmegaRing::word_of(const BasisMonomial& m) const {
    std::vector<Ord> w;
    if (m.kind == BasisMonomial::Q) {
        w.push_back(ord_q(m.k));
    } else if (m.kind == BasisMonomial::D) {
        for (size_t s = 0; s < m.I.size(); ++s)
            w.push_back(ord_d(m.I[s].first, s + 1 == m.I.size() ? m.j : 0, m.I[s].second));
    }
    return w;
}

std::map<BasisMonomial, GradedRational> OmegaRing::nf_impl(const std::vector<Ord>& word) const {
    {
        std::lock_guard<std::mutex> g(memo_mx_);
        auto it = memo_.find(word);
        if (it != memo_.end()) return it->second;
    }
    std::map<BasisMonomial, GradedRational> out;
    auto put = [&out](const BasisMonomial& m, const GradedRational& c) {
        if (c.is_zero()) return;
        auto it = out.find(m);
        if (it == out.end()) {
            out.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    size_t N = word.size();
    if (N == 0) {
        put(BasisMonomial::unit(), GradedRational::one());
    } else if (N == 1) {
        const Ord& o = word[0];
        if (o.finite())
            put(BasisMonomial::q(o.off + 1), GradedRational::one());
        else
            put(BasisMonomial::d({{ord_l(o), ord_i(o)}}, o.off), GradedRational::one());
    } else if (word[0] == Ord{-1, 0}) {
        // relation (30): q_1 x_t = p_t q_1, absorbing every other factor
        GradedRational c = GradedRational::one();
        for (size_t s = 1; s < N; ++s) c *= p_ord(word[s]);
        put(BasisMonomial::q(1), c);
    } else {
        bool terminal = !word[0].finite();
        for (size_t s = 0; terminal && s + 1 < N; ++s)
            if (word[s].off != 0) terminal = false;
        if (terminal) {
            std::vector<std::pair<int, int>> I;
            for (const Ord& o : word) I.push_back({ord_l(o), ord_i(o)});
            put(BasisMonomial::d(std::move(I), word[N - 1].off), GradedRational::one());
        } else {
            // relation (29) with s = least decrementable non-maximal factor,
            // t = the maximal factor
            size_t s = 0;
            while (s + 1 < N && word[s].off == 0) ++s;
            if (s + 1 == N) throw DomainError("internal: no decrementable factor in word");
            Ord xs = word[s], xt = word[N - 1];
            Ord xs1{xs.block, xs.off - 1}, xt1{xt.block, xt.off + 1};
            std::vector<Ord> rest;
            for (size_t r = 0; r + 1 < N; ++r)
                if (r != s) rest.push_back(word[r]);
            auto with = [&rest](std::initializer_list<Ord> extra) {
                std::vector<Ord> w = rest;
                for (const Ord& o : extra) w.push_back(o);
                std::sort(w.begin(), w.end());
                return w;
            };
            for (const auto& [m, c] : nf_impl(with({xs1, xt1}))) put(m, c);
            GradedRational pt = p_ord(xt), ps1 = p_ord(xs1);
            for (const auto& [m, c] : nf_impl(with({xs}))) put(m, c * pt);
            for (const auto& [m, c] : nf_impl(with({xt1}))) put(m, -(c * ps1));
        }
    }
    std::lock_guard<std::mutex> g(memo_mx_);
    auto [it, fresh] = memo_.emplace(word, out);
    (void)fresh;
    return it->second;
}

PresentationElement OmegaRing::normal_form(std::vector<Ord> word) const {
    std::sort(word.begin(), word.end());
    PresentationElement e;
    for (const auto& [m, c] : nf_impl(word)) e.add_term(m, c);
    return e;
}

PresentationElement OmegaRing::multiply(const PresentationElement& a,
                                        const PresentationElement& b) const {
    PresentationElement r;
    for (const auto& [ma, ca] : a.terms()) {
        std::vector<Ord> wa = word_of(ma);
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<Ord> w = wa;
            for (const Ord& o : word_of(mb)) w.push_back(o);
            std::sort(w.begin(), w.end());
            GradedRational c = ca * cb;
            for (const auto& [m, v] : nf_impl(w)) r.add_term(m, v * c);
        }
    }
    return r;
}

TargetPoly OmegaRing::kappa_gen_q(int k) const {
    long p = prime();
    TargetPoly t = TargetPoly::zero(p);
    for (int s = 1; s <= k; ++s)
        t = t - TargetPoly::u_pow(p, 1, -s).scaled(ctx_.p_series_coeff(k - s));
    return t;
}

TargetPoly OmegaRing::kappa_gen_d(int l, int j, int i) const {
    long p = prime();
    if (l == 0 && i == 1) return TargetPoly::zero(p);
    TargetPoly t = TargetPoly::u_pow(p, 1, -j) * TargetPoly::d_gen(p, l, i);
    for (int k = 1; k <= l + 1 + j; ++k)
        t = t - TargetPoly::u_pow(p, 1, -k).scaled(ctx_.t(i, l, j - k));
    return t;
}

TargetPoly OmegaRing::kappa(const PresentationElement& x) const {
    long p = prime();
    TargetPoly out = TargetPoly::zero(p);
    for (const auto& [m, c] : x.terms()) {
        TargetPoly img = TargetPoly::unit(p);
        if (m.kind == BasisMonomial::Q) {
            img = kappa_gen_q(m.k);
        } else if (m.kind == BasisMonomial::D) {
            for (size_t s = 0; s < m.I.size(); ++s)
                img = img * kappa_gen_d(m.I[s].first, s + 1 == m.I.size() ? m.j : 0, m.I[s].second);
        }
        out = out + img.scaled(c);
    }
    return out;
}

GradedRational OmegaRing::res(const PresentationElement& x) const {
    GradedRational out;
    for (const auto& [m, c] : x.terms()) {
        GradedRational img = GradedRational::one();
        if (m.kind == BasisMonomial::Q) {
            img = ctx_.p_series_coeff(m.k);
        } else if (m.kind == BasisMonomial::D) {
            for (size_t s = 0; s < m.I.size(); ++s)
                img *= ctx_.t(m.I[s].second, m.I[s].first, s + 1 == m.I.size() ? m.j : 0);
        }
        out += img * c;
    }
    return out;
}

PresentationElement OmegaRing::gamma_basis(const BasisMonomial& m) const {
    long p = prime();
    PresentationElement base = d_elt(0, 0, static_cast<int>(p - 1)) - q_elt(2);
    if (m.kind == BasisMonomial::Unit) return base;
    if (m.kind == BasisMonomial::Q) {
        return base.scaled(ctx_.p_series_coeff(m.k)) + q_elt(m.k + 1);
    }
    // d_{I,j}: the residue-prefix sum of offset-shifted words
    PresentationElement el;
    GradedRational pref = GradedRational::one();
    size_t N = m.I.size();
    for (size_t r = 0; r < N; ++r) {
        std::vector<Ord> w;
        for (size_t s = r; s < N; ++s) {
            int off = s + 1 == N ? m.j : 0;
            if (s == r) off += 1;
            w.push_back(ord_d(m.I[s].first, off, m.I[s].second));
        }
        el = el + normal_form(std::move(w)).scaled(pref);
        pref *= ctx_.t(m.I[r].second, m.I[r].first, r + 1 == N ? m.j : 0);
    }
    PresentationElement single;
    single.add_term(m, GradedRational::one());
    return base.scaled(res(single)) + el;
}

PresentationElement OmegaRing::gamma(const PresentationElement& x) const {
    PresentationElement out;
    for (const auto& [m, c] : x.terms()) out = out + gamma_basis(m).scaled(c);
    return out;
}

std::pair<bool, GradedRational> OmegaRing::kernel_test(const PresentationElement& x) const {
    GradedRational c;
    for (const auto& [m, v] : x.terms()) {
        if (!(m.kind == BasisMonomial::Q && m.k == 1)) return {false, GradedRational::zero()};
        c = v;
    }
    return {true, c};
}

}  // namespace cobord
