#pragma once

#include <map>
#include <string>
#include <vector>

#include "cobord/fgl.hpp"
#include "cobord/mpoly.hpp"

namespace cobord {

// Monomial in the geometric-fixed-points presentation MU_*[u_i^{±1}, d_l^{(i)}]:
// Laurent exponents for u_1..u_{p-1} and a sorted factor list for the d_l^{(i)}
// with l >= 1 (d_0^{(i)} is identified with u_i^{-1} eagerly at construction).
struct TargetMono {
    std::vector<int> uexp;  // uexp[i-1] = exponent of u_i; fixed length p-1
    std::vector<std::pair<std::pair<int, int>, int>> dfac;  // ((l, i), e), l >= 1, sorted

    long sym_degree() const;  // |u_i| = -2, |d_l^{(i)}| = 2(l+1)
    bool operator<(const TargetMono& o) const { return std::tie(uexp, dfac) < std::tie(o.uexp, o.dfac); }
    bool operator==(const TargetMono& o) const { return uexp == o.uexp && dfac == o.dfac; }
    std::string str() const;  // "u1^-2*u2^-1*D(1,2)^3", "" for the unit
};

// Lemma-4.3 elimination order: u^{-1} < u_2^{-1} < ... < u_{p-1}^{-1} < d_l^{(i)},
// with d_l^{(i)} < d_s^{(i')} iff l < s, or l = s and i < i'. Lexicographic on
// monomials, scanning symbols from greatest to least.
bool target_mono_less(const TargetMono& a, const TargetMono& b);

// Element of MU_*[u_i^{±1}, d_l^{(i)}] with GradedRational coefficients.
// May hold mixed total degrees (formal sum of homogeneous parts).
class TargetPoly {
  public:
    explicit TargetPoly(int num_u = 0) : nu_(num_u) {}

    static TargetPoly zero(long p) { return TargetPoly(static_cast<int>(p) - 1); }
    static TargetPoly unit(long p);
    static TargetPoly u_pow(long p, int i, int e);  // u_i^e
    static TargetPoly d_gen(long p, int l, int i);  // d_l^{(i)}; l = 0 maps to u_i^{-1}
    static TargetPoly constant(long p, const GradedRational& c);

    int num_u() const { return nu_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TargetMono, GradedRational>& terms() const { return terms_; }

    TargetPoly operator+(const TargetPoly& o) const;
    TargetPoly operator-(const TargetPoly& o) const;
    TargetPoly operator*(const TargetPoly& o) const;
    TargetPoly operator-() const;
    TargetPoly scaled(const GradedRational& g) const;
    bool operator==(const TargetPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const TargetPoly& o) const { return !(*this == o); }

    void add_term(TargetMono m, const GradedRational& c);

    // Greatest monomial under the elimination order; error when zero.
    const TargetMono& leading_monomial() const;

    std::string str() const;

  private:
    int nu_;
    std::map<TargetMono, GradedRational> terms_;
};

}  // namespace cobord
