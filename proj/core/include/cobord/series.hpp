#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cobord/mpoly.hpp"

namespace cobord {

// Grading convention for the formal variables. EulerWeights gives x and u
// topological degree -2 (Euler-class side); InverseWeights gives them +2.
// Arithmetic requires matching conventions.
enum class Convention { EulerWeights, InverseWeights };

// Truncated series sum_{l>=0, j>=floor} c_{l,j} x^l u^j with homogeneous
// GradedRational coefficients: deg c_{l,j} = total_deg + shift*(l+j), where
// shift is +2 (EulerWeights) or -2 (InverseWeights).
//
// Truncation loss is tracked per x-row: coefficients at (l, j) are exact for
// j <= trust(l); beyond that nothing is asserted. Rows past the stored trust
// vector carry the tail trust (TRUST_INF for rows known to vanish, TRUST_NONE
// for rows never computed). Operations propagate the guaranteed-valid window,
// so comparisons can only assert within it.
class Series {
  public:
    static constexpr int TRUST_INF = 1 << 20;
    static constexpr int TRUST_NONE = -(1 << 20);
    static constexpr int X_LIMIT = 80;

    Series(Convention conv, long total_deg, int u_floor = 0);

    static Series zero(Convention conv, long total_deg, int u_floor = 0);
    static Series unit(Convention conv);  // 1
    // coeff * x^l u^j; total degree inferred from the coefficient.
    static Series monomial(Convention conv, int l, int j, const GradedRational& coeff);

    Convention conv() const { return conv_; }
    long total_deg() const { return total_deg_; }
    int u_floor() const { return u_floor_; }
    bool empty() const { return c_.empty(); }
    const std::map<std::pair<int, int>, GradedRational>& coeffs() const { return c_; }

    GradedRational coeff(int l, int j) const;  // zero if absent (may be untrusted)
    int trust(int l) const;
    void set_row_trust(int l, int t);
    void set_tail_trust(int t) { tail_trust_ = t; }
    // Lower bound on the true u-valuation of row l (TRUST_INF if known zero).
    int row_floor(int l) const;
    int x_val() const;  // least l with a nonzero row (X_LIMIT+1 if none known)
    // Least L with every row >= L known identically zero (X_LIMIT+1 if none).
    int rows_end() const;

    // Inserts/overwrites a coefficient; validates homogeneity.
    void set(int l, int j, GradedRational v);

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator-() const;
    Series scaled(const GradedRational& g) const;
    Series scaled(const Rat& q) const;
    Series shifted_u(int s) const;  // multiply by u^s (exact)

    // Restrict the window: drop rows beyond l_max and u-exponents beyond u_max.
    Series truncated(int l_max, int u_max) const;
    // Keep only total exponent l + j <= order. Exact (not merely conservative)
    // for series produced from inputs supported on the same triangle.
    Series truncated_triangle(int order) const;

    // Geometric-series inversion. Requires the lowest (x=0, lowest-u) term to
    // be a nonzero rational multiple of a monomial u^v and the remainder to
    // have positive x- or u-valuation after factoring it out.
    Series inverted_unit() const;

    // True if every trusted coefficient of (*this - o) vanishes and the shared
    // window contains at least (x <= min_x, u <= min_u).
    bool agrees_with(const Series& o, int min_x, int min_u) const;
    bool is_zero_within(int min_x, int min_u) const;

    std::string str() const;

  private:
    Convention conv_;
    long total_deg_;
    int u_floor_;
    int tail_trust_ = TRUST_INF;
    std::vector<int> row_trust_;  // rows 0..size-1; beyond: tail_trust_
    std::map<std::pair<int, int>, GradedRational> c_;

    int shift() const { return conv_ == Convention::EulerWeights ? 2 : -2; }
    void drop_untrusted();
    friend class SeriesBuilder;
};

// Substitute `inner` (with positive x- or u-valuation) into the univariate
// series sum_r outer[r] t^r (index = exponent; outer[0] is the constant term).
Series compose(const std::vector<GradedRational>& outer, const Series& inner);

// Coefficient list of the multiplicative inverse of b0 + b1 x + b2 x^2 + ...
// Requires b[0] to be an invertible rational constant. Involutive.
std::vector<GradedRational> antipode(const std::vector<GradedRational>& b);

}  // namespace cobord
