#pragma once

#include <optional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cobord/hnf.hpp"
#include "cobord/mpoly.hpp"
#include "cobord/series.hpp"
#include "cobord/witness.hpp"

namespace cobord {

// An element of MU_* presented rationally, together with (when available) an
// integer-polynomial witness in the a(k,j) certifying integrality.
struct LazardElement {
    GradedRational value;
    std::optional<APoly> witness;
};

// Result of a certified division by [p]u. On success `quotient` satisfies
// series = [p]u * quotient coefficientwise throughout its trusted window.
struct SeriesDivision {
    bool ok = false;
    Series quotient{Convention::EulerWeights, 0};
    int fail_l = 0;
    int fail_j = 0;
    std::string reason;
};

// Immutable per-(prime, truncation) cache of the universal formal group law:
// exp/log coefficients, the shifted coefficient tables a_{k,j}^{(i)} of
// x +_F [i]u, the p-series coefficients c_j, the f_i series, the t-table
// rows of (x +_F [i]u)^{-1}, and per-degree integrality lattices.
//
// Internal tables extend to order T = 2D+3 so that every quantity the public
// window (degree <= 2D) promises is exact; accessors fail loudly beyond what
// is certified. All state is built in the constructor; the object is safe to
// share across threads afterwards.
class FGLContext {
  public:
    FGLContext(long p, int D);

    long prime() const { return p_; }
    int truncation() const { return D_; }
    int table_order() const { return T_; }

    // a_{k,j}: coefficient of x^k u^j in F(x, u), k + j <= T.
    const GradedRational& fgl(int k, int j) const { return shifted(1, k, j); }
    // a_{k,j}^{(i)}: coefficient of x^k u^j in x +_F [i]u.
    const GradedRational& shifted(int i, int k, int j) const;
    // c_j: coefficient of u^j in [p]u, j <= T.
    const GradedRational& p_series_coeff(int j) const;
    // (i^{-1}, k_i) with i^{-1} i = 1 + k_i p, i^{-1} the lowest positive rep.
    std::pair<long, long> inv_rep(int i) const;
    // coefficients of f_i(u) (Eq.-style representative), index j <= T-1.
    const std::vector<GradedRational>& f_table(int i) const;
    // row l of the pinned expansion of (x +_F [i]u)^{-1}, l <= D.
    const Series& t_row(int i, int l) const;
    GradedRational t(int i, int l, int j) const;  // trust-checked
    int t_trust(int i, int l) const;

    const std::vector<GradedRational>& exp_coeffs() const { return ex_; }
    const std::vector<GradedRational>& log_coeffs() const { return logc_; }

    Series x_series() const;              // x, trusted through order T
    Series u_series() const;              // u
    Series n_series(long n, int order) const;  // [n]u, order <= T
    Series p_u_series(int order) const { return n_series(p_, order); }
    Series log_compose(const Series& s) const;
    Series exp_compose(const Series& s) const;
    Series fgl_sum(const Series& a, const Series& b) const;  // a +_F b

    // Integrality certification; defined for homogeneous degree <= 2D.
    std::optional<APoly> integrality_witness(const GradedRational& z) const;
    std::optional<LazardElement> divide_by_p(const GradedRational& z) const;
    std::optional<APoly> c_witness(int j) const;              // for c_j, j <= D+1
    std::optional<APoly> t_witness(int i, int l, int j) const;  // l+j+1 <= D

    // Certified division by [p]u, rowwise; quotient coefficients beyond
    // homogeneous degree 2D are left uncertified (trust window shrinks).
    SeriesDivision divide_by_p_series(const Series& s) const;

  private:
    long p_;
    int D_;
    int T_;
    std::vector<GradedRational> logc_;  // index r: coeff of t^r in log t
    std::vector<GradedRational> ex_;    // index r: coeff of t^r in exp t
    std::vector<std::vector<GradedRational>> LP_;  // LP_[n][b]: [t^b] (log t)^n
    // shifted_[i-1][k][j], k + j <= T
    std::vector<std::vector<std::vector<GradedRational>>> shifted_;
    std::vector<GradedRational> c_;     // c_[j], j <= T
    std::vector<std::pair<long, long>> inv_;
    std::vector<std::vector<GradedRational>> f_;   // f_[i-1][j], j <= T-1
    std::vector<std::vector<Series>> trows_;       // trows_[i-1][l], l <= D

    struct DegreeLattice {
        std::vector<MMono> basis;
        std::map<MMono, int> index;
        Int scale = 1;  // common denominator of generator images
        IntegerLattice lat{0};
    };
    std::vector<DegreeLattice> lattices_;  // half-degree 0..D
    std::map<int, APoly> c_wit_;
    std::map<std::tuple<int, int, int>, APoly> t_wit_;

    void build_exp();
    void build_shifted();
    void build_t_tables();
    void build_lattices();
    void build_table_witnesses();
    std::optional<std::vector<Int>> lattice_coords(const GradedRational& z, int n) const;
};

}  // namespace cobord
