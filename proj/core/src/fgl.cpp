#include "cobord/fgl.hpp"

#include <algorithm>
#include <tuple>

namespace cobord {

namespace {

using UVec = std::vector<GradedRational>;

UVec umul(const UVec& a, const UVec& b, int cap) {
    UVec c(cap + 1);
    for (int i = 0; i < static_cast<int>(a.size()) && i <= cap; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < static_cast<int>(b.size()) && i + j <= cap; ++j) {
            if (b[j].is_zero()) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

FGLContext::FGLContext(long p, int D) : p_(p), D_(D), T_(2 * D + 3) {
    if (!is_prime(p)) throw DomainError("FGLContext: p = " + std::to_string(p) + " is not prime");
    if (D < 1) throw DomainError("FGLContext: truncation must be >= 1");
    if (T_ > Series::X_LIMIT - 2) throw DomainError("FGLContext: truncation too large");
    build_exp();
    build_shifted();
    build_t_tables();
    build_lattices();
    build_table_witnesses();
}

void FGLContext::build_exp() {
    logc_.assign(T_ + 1, GradedRational::zero());
    logc_[1] = GradedRational::one();
    for (int r = 2; r <= T_; ++r) logc_[r] = GradedRational::gen_m(r - 1);

    ex_.assign(T_ + 1, GradedRational::zero());
    ex_[1] = GradedRational::one();
    for (int s = 2; s <= T_; ++s) {
        // [t^s] of exp t + sum_k m_k (exp t)^{k+1} = t, with exp known below s
        UVec E(s + 1);
        for (int r = 1; r < s; ++r) E[r] = ex_[r];
        UVec Ek = E;
        GradedRational acc;
        for (int k = 1; k <= s - 1; ++k) {
            Ek = umul(Ek, E, s);  // E^{k+1}
            acc += logc_[k + 1] * Ek[s];
        }
        ex_[s] = -acc;
    }

    LP_.assign(T_ + 1, UVec(T_ + 1));
    LP_[0][0] = GradedRational::one();
    UVec logv(T_ + 1);
    for (int r = 1; r <= T_; ++r) logv[r] = logc_[r];
    for (int n = 1; n <= T_; ++n) LP_[n] = umul(LP_[n - 1], logv, T_);
}

void FGLContext::build_shifted() {
    // base table a_{k,j} of F(x, u) = exp(log x + log u), triangle k+j <= T
    std::vector<std::vector<GradedRational>> base(T_ + 1);
    std::vector<std::vector<Int>> binom(T_ + 1, std::vector<Int>(T_ + 1, 0));
    for (int n = 0; n <= T_; ++n) {
        binom[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : Int(0));
    }
    for (int a = 0; a <= T_; ++a) {
        base[a].assign(T_ - a + 1, GradedRational::zero());
        for (int b = 0; b <= T_ - a; ++b) {
            GradedRational acc;
            for (int n = 1; n <= a + b; ++n) {
                GradedRational inner;
                for (int k = std::max(0, n - b); k <= std::min(a, n); ++k) {
                    int m = n - k;
                    if (LP_[k][a].is_zero() || LP_[m][b].is_zero()) continue;
                    inner += (LP_[k][a] * LP_[m][b]).scaled(Rat(binom[n][k]));
                }
                if (!inner.is_zero()) acc += ex_[n] * inner;
            }
            base[a][b] = acc;
        }
    }

    // modular inverses
    inv_.resize(p_ - 1);
    for (long i = 1; i <= p_ - 1; ++i) {
        long inv = 1;
        while ((inv * i) % p_ != 1) ++inv;
        inv_[i - 1] = {inv, (inv * i - 1) / p_};
    }

    // c_j: [p]u = exp(p log u)
    c_.assign(T_ + 1, GradedRational::zero());
    for (int j = 1; j <= T_; ++j) {
        GradedRational acc;
        Int pw = 1;
        for (int n = 1; n <= j; ++n) {
            pw *= p_;
            if (!LP_[n][j].is_zero()) acc += ex_[n] * LP_[n][j].scaled(Rat(pw));
        }
        c_[j] = acc;
    }

    // a^{(i)}_{k,j}: substitute u -> [i]u in the base table
    shifted_.assign(p_ - 1, {});
    for (long i = 1; i <= p_ - 1; ++i) {
        // [i]u coefficients and powers
        UVec viu(T_ + 1);
        for (int j = 1; j <= T_; ++j) {
            GradedRational acc;
            Int pw = 1;
            for (int n = 1; n <= j; ++n) {
                pw *= i;
                if (!LP_[n][j].is_zero()) acc += ex_[n] * LP_[n][j].scaled(Rat(pw));
            }
            viu[j] = acc;
        }
        std::vector<UVec> vpow(T_ + 1);
        vpow[0].assign(T_ + 1, GradedRational::zero());
        vpow[0][0] = GradedRational::one();
        for (int s = 1; s <= T_; ++s) vpow[s] = umul(vpow[s - 1], viu, T_);

        auto& tab = shifted_[i - 1];
        tab.resize(T_ + 1);
        for (int k = 0; k <= T_; ++k) {
            tab[k].assign(T_ - k + 1, GradedRational::zero());
            for (int j = 0; j <= T_ - k; ++j) {
                GradedRational acc;
                for (int s = 0; s <= j; ++s) {
                    if (base[k][s].is_zero() || vpow[s][j].is_zero()) continue;
                    acc += base[k][s] * vpow[s][j];
                }
                tab[k][j] = acc;
            }
        }
    }
}

void FGLContext::build_t_tables() {
    f_.assign(p_ - 1, {});
    trows_.assign(p_ - 1, {});
    for (long i = 1; i <= p_ - 1; ++i) {
        long inv = inv_[i - 1].first;
        // f_i(u) = sum_s a^{(i^{-1})}_{0,s+1} ([i]u)^s
        UVec viu(T_ + 1);
        for (int j = 1; j <= T_; ++j) viu[j] = shifted(static_cast<int>(i), 0, j);
        std::vector<UVec> vpow(T_);
        vpow[0].assign(T_ + 1, GradedRational::zero());
        vpow[0][0] = GradedRational::one();
        for (int s = 1; s < T_; ++s) vpow[s] = umul(vpow[s - 1], viu, T_);
        auto& f = f_[i - 1];
        f.assign(T_, GradedRational::zero());
        for (int j = 0; j <= T_ - 1; ++j) {
            GradedRational acc;
            for (int s = 0; s <= j; ++s) {
                const GradedRational& a0 = shifted(static_cast<int>(inv), 0, s + 1);
                if (a0.is_zero() || vpow[s][j].is_zero()) continue;
                acc += a0 * vpow[s][j];
            }
            f[j] = acc;
        }

        // g_i = u^{-1} f_i
        Series g(Convention::EulerWeights, 2, -1);
        for (int j = 0; j <= T_ - 1; ++j) g.set(0, j - 1, f[j]);
        g.set_row_trust(0, T_ - 2);

        // B_k(u), k >= 1: x^k-coefficient of x +_F [i]u
        std::vector<Series> B;
        B.push_back(Series::zero(Convention::EulerWeights, 0));  // unused slot k=0
        for (int k = 1; k <= D_; ++k) {
            Series b(Convention::EulerWeights, 2 * (k - 1), 0);
            for (int j = 0; j <= T_ - k; ++j) b.set(0, j, shifted(static_cast<int>(i), k, j));
            b.set_row_trust(0, T_ - k);
            B.push_back(std::move(b));
        }

        // row recurrence for g * sum_n (-g * sum B_k x^k)^n
        auto& rows = trows_[i - 1];
        rows.push_back(g);
        for (int l = 1; l <= D_; ++l) {
            Series acc = Series::zero(Convention::EulerWeights, 2 * l, -l);
            for (int k = 1; k <= l; ++k) acc = acc + B[k] * rows[l - k];
            rows.push_back(-(g * acc));
            if (rows[l].trust(0) < D_)
                throw TruncationError("t-table row " + std::to_string(l) +
                                          " lost precision before u^" + std::to_string(D_),
                                      2 * D_);
        }
    }
}

void FGLContext::build_lattices() {
    lattices_.clear();
    lattices_.reserve(D_ + 1);
    for (int n = 0; n <= D_; ++n) {
        DegreeLattice L;
        L.basis = weight_monomials(n);
        for (size_t idx = 0; idx < L.basis.size(); ++idx)
            L.index.emplace(L.basis[idx], static_cast<int>(idx));
        L.lat = IntegerLattice(static_cast<int>(L.basis.size()));

        // generator monomials of half-degree n in the a(k,j), k <= j
        std::vector<std::tuple<int, int, int>> gens;  // (half-degree, k, j)
        for (int k = 1; k <= n + 1; ++k)
            for (int j = k; k + j <= n + 1; ++j) gens.push_back({k + j - 1, k, j});
        std::vector<std::pair<AMono, GradedRational>> monos;
        AMono cur;
        GradedRational curval = GradedRational::one();
        auto rec = [&](auto&& self, int rem, size_t g0) -> void {
            if (rem == 0) {
                monos.push_back({cur, curval});
                return;
            }
            if (g0 >= gens.size()) return;
            self(self, rem, g0 + 1);  // without this generator
            auto [d, k, j] = gens[g0];
            GradedRational saved = curval;
            cur.factors.push_back({{k, j}, 0});
            for (int e = 1; e * d <= rem; ++e) {
                cur.factors.back().second = e;
                curval *= fgl(k, j);
                self(self, rem - e * d, g0 + 1);
            }
            cur.factors.pop_back();
            curval = saved;
        };
        rec(rec, n, 0);

        // common denominator across all generator images in this degree
        for (const auto& [m, v] : monos) {
            (void)m;
            Int d = v.denominator_lcm();
            mpz_lcm(L.scale.get_mpz_t(), L.scale.get_mpz_t(), d.get_mpz_t());
        }
        for (const auto& [m, v] : monos) {
            std::vector<Int> row(L.basis.size(), Int(0));
            for (const auto& [mm, q] : v.terms()) {
                Rat s = q * Rat(L.scale);
                s.canonicalize();
                row[L.index.at(mm)] = s.get_num();
            }
            APoly label;
            label.add_term(m, Int(1));
            L.lat.add(std::move(row), std::move(label));
        }
        lattices_.push_back(std::move(L));
    }
}

void FGLContext::build_table_witnesses() {
    for (int j = 1; j <= std::min(D_ + 1, T_); ++j) {
        auto w = integrality_witness(c_[j]);
        if (!w)
            throw DomainError("internal: p-series coefficient c_" + std::to_string(j) +
                              " failed integrality certification");
        c_wit_.emplace(j, std::move(*w));
    }
    for (int i = 1; i <= p_ - 1; ++i)
        for (int l = 0; l <= D_; ++l)
            for (int j = -(l + 1); l + j + 1 <= D_; ++j) {
                auto w = integrality_witness(t(i, l, j));
                if (!w)
                    throw DomainError("internal: t-table entry (" + std::to_string(i) + "," +
                                      std::to_string(l) + "," + std::to_string(j) +
                                      ") failed integrality certification");
                t_wit_.emplace(std::make_tuple(i, l, j), std::move(*w));
            }
}

const GradedRational& FGLContext::shifted(int i, int k, int j) const {
    if (i < 1 || i > p_ - 1) throw DomainError("shifted table: i out of range");
    if (k < 0 || j < 0) throw DomainError("shifted table: negative index");
    if (k + j > T_)
        throw TruncationError("shifted table: a_{" + std::to_string(k) + "," + std::to_string(j) +
                                  "} beyond table order " + std::to_string(T_),
                              2 * (k + j - 1));
    return shifted_[i - 1][k][j];
}

const GradedRational& FGLContext::p_series_coeff(int j) const {
    if (j < 0) throw DomainError("p-series: negative index");
    if (j > T_) throw TruncationError("p-series: c_" + std::to_string(j) + " beyond table order",
                                      2 * (j - 1));
    return c_[j];
}

std::pair<long, long> FGLContext::inv_rep(int i) const {
    if (i < 1 || i > p_ - 1) throw DomainError("inv_rep: i out of range");
    return inv_[i - 1];
}

const std::vector<GradedRational>& FGLContext::f_table(int i) const {
    if (i < 1 || i > p_ - 1) throw DomainError("f_table: i out of range");
    return f_[i - 1];
}

const Series& FGLContext::t_row(int i, int l) const {
    if (i < 1 || i > p_ - 1) throw DomainError("t_row: i out of range");
    if (l < 0 || l > D_)
        throw TruncationError("t_row: row " + std::to_string(l) + " beyond truncation", 2 * l);
    return trows_[i - 1][l];
}

GradedRational FGLContext::t(int i, int l, int j) const {
    const Series& row = t_row(i, l);
    if (j < -(l + 1)) return GradedRational::zero();
    if (j > row.trust(0))
        throw TruncationError("t-table: entry u^" + std::to_string(j) + " in row " +
                                  std::to_string(l) + " beyond certified window",
                              2 * (l + j + 1));
    return row.coeff(0, j);
}

int FGLContext::t_trust(int i, int l) const { return t_row(i, l).trust(0); }

Series FGLContext::x_series() const {
    return Series::monomial(Convention::EulerWeights, 1, 0, GradedRational::one());
}

Series FGLContext::u_series() const {
    return Series::monomial(Convention::EulerWeights, 0, 1, GradedRational::one());
}

Series FGLContext::n_series(long n, int order) const {
    if (order > T_)
        throw TruncationError("n_series: order beyond table order " + std::to_string(T_),
                              2 * (order - 1));
    Series s(Convention::EulerWeights, -2, 0);
    for (int j = 1; j <= order; ++j) {
        GradedRational acc;
        Int pw = 1;
        for (int r = 1; r <= j; ++r) {
            pw *= n;
            if (!LP_[r][j].is_zero()) acc += ex_[r] * LP_[r][j].scaled(Rat(pw));
        }
        s.set(0, j, acc);
    }
    s.set_row_trust(0, order);
    return s;
}

Series FGLContext::log_compose(const Series& s) const {
    int R = T_;
    Series acc(s.conv(), logc_[R].degree());
    acc.set(0, 0, logc_[R]);
    for (int r = R - 1; r >= 1; --r) {
        acc = (acc * s).truncated_triangle(T_);
        if (!logc_[r].is_zero()) {
            Series cst(s.conv(), logc_[r].degree());
            cst.set(0, 0, logc_[r]);
            acc = acc + cst;
        }
    }
    return (acc * s).truncated_triangle(T_);
}

Series FGLContext::exp_compose(const Series& s) const {
    int R = T_;
    Series acc(s.conv(), ex_[R].degree());
    acc.set(0, 0, ex_[R]);
    for (int r = R - 1; r >= 1; --r) {
        acc = (acc * s).truncated_triangle(T_);
        if (!ex_[r].is_zero()) {
            Series cst(s.conv(), ex_[r].degree());
            cst.set(0, 0, ex_[r]);
            acc = acc + cst;
        }
    }
    return (acc * s).truncated_triangle(T_);
}

Series FGLContext::fgl_sum(const Series& a, const Series& b) const {
    return exp_compose((log_compose(a) + log_compose(b)).truncated_triangle(T_));
}

std::optional<std::vector<Int>> FGLContext::lattice_coords(const GradedRational& z, int n) const {
    const DegreeLattice& L = lattices_[n];
    std::vector<Int> v(L.basis.size(), Int(0));
    for (const auto& [m, q] : z.terms()) {
        Rat s = q * Rat(L.scale);
        s.canonicalize();
        if (s.get_den() != 1) return std::nullopt;  // denominator exceeds the lattice scale
        auto it = L.index.find(m);
        if (it == L.index.end()) throw DomainError("internal: monomial outside degree basis");
        v[it->second] = s.get_num();
    }
    return v;
}

std::optional<APoly> FGLContext::integrality_witness(const GradedRational& z) const {
    if (z.is_zero()) return APoly();
    long d = z.degree();
    if (d % 2 != 0) throw DomainError("integrality_witness: odd degree");
    if (d > 2 * D_)
        throw TruncationError("integrality_witness: degree " + std::to_string(d) +
                                  " beyond window " + std::to_string(2 * D_),
                              d);
    auto v = lattice_coords(z, static_cast<int>(d / 2));
    if (!v) return std::nullopt;
    return lattices_[d / 2].lat.express(std::move(*v));
}

std::optional<LazardElement> FGLContext::divide_by_p(const GradedRational& z) const {
    GradedRational q = z.scaled(Rat(1, static_cast<unsigned long>(p_)));
    auto w = integrality_witness(q);
    if (!w) return std::nullopt;
    return LazardElement{std::move(q), std::move(*w)};
}

std::optional<APoly> FGLContext::c_witness(int j) const {
    auto it = c_wit_.find(j);
    if (it == c_wit_.end()) return std::nullopt;
    return it->second;
}

std::optional<APoly> FGLContext::t_witness(int i, int l, int j) const {
    auto it = t_wit_.find(std::make_tuple(i, l, j));
    if (it == t_wit_.end()) return std::nullopt;
    return it->second;
}

SeriesDivision FGLContext::divide_by_p_series(const Series& s) const {
    if (s.conv() != Convention::EulerWeights)
        throw DomainError("divide_by_p_series: expected Euler-weight convention");
    SeriesDivision R;
    Series q(s.conv(), s.total_deg() + 2, s.u_floor() - 1);
    int end = s.rows_end();
    q.set_tail_trust(end <= Series::X_LIMIT ? Series::TRUST_INF : Series::TRUST_NONE);
    for (int l = 0; l < std::min(end, Series::X_LIMIT + 1); ++l) {
        int ts = s.trust(l);
        if (ts == Series::TRUST_NONE) {
            q.set_row_trust(l, Series::TRUST_NONE);
            continue;
        }
        int lo = s.row_floor(l);
        if (lo == Series::TRUST_INF) {
            q.set_row_trust(l, Series::TRUST_INF);
            continue;
        }
        int jq0 = lo - 1;
        int certified = jq0 - 1;
        for (int j = jq0; j <= ts - 1; ++j) {
            long cdeg = q.total_deg() + 2L * (l + j);
            if (cdeg > 2 * D_) break;  // past the certification window
            if (j + 1 - jq0 > T_) break;  // would need p-series coefficients past the table
            GradedRational num = s.coeff(l, j + 1);
            for (int k = 2; k <= j + 1 - jq0 && k <= T_; ++k) num -= c_[k] * q.coeff(l, j + 1 - k);
            if (cdeg < 0) {
                if (!num.is_zero()) {
                    R.fail_l = l;
                    R.fail_j = j;
                    R.reason = "nonzero residue below degree zero at x^" + std::to_string(l) +
                               " u^" + std::to_string(j + 1);
                    R.quotient = std::move(q);
                    return R;
                }
                certified = j;
                continue;
            }
            GradedRational val = num.scaled(Rat(1, static_cast<unsigned long>(p_)));
            if (!integrality_witness(val)) {
                R.fail_l = l;
                R.fail_j = j;
                R.reason = "quotient coefficient at x^" + std::to_string(l) + " u^" +
                           std::to_string(j) + " is not integral";
                R.quotient = std::move(q);
                return R;
            }
            q.set(l, j, std::move(val));
            certified = j;
        }
        q.set_row_trust(l, certified);
    }
    R.ok = true;
    R.quotient = std::move(q);
    return R;
}

}  // namespace cobord
