#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "cobord/errors.hpp"

namespace cobord {

using Int = mpz_class;
using Rat = mpq_class;

// Exponent vector over the logarithm generators m_1, m_2, ...
// exps[k] is the exponent of m_{k+1}; trailing zeros are trimmed.
struct MMono {
    std::vector<int> exps;

    // weighted degree: m_i counts i, so topological degree is 2*weight().
    long weight() const;
    void trim();
    bool operator<(const MMono& o) const { return exps < o.exps; }
    bool operator==(const MMono& o) const { return exps == o.exps; }
    std::string str() const;  // "m1^2*m3", "" for the empty monomial
};

// Homogeneous element of MU_* ⊗ Q = Q[m_1, m_2, ...].
// Topological degree = 2 * (common weight of all monomials); always even.
// The zero element has no terms and compares equal to zero of any degree.
class GradedRational {
  public:
    GradedRational() = default;

    static GradedRational zero() { return {}; }
    static GradedRational one();
    static GradedRational integer(long n);
    static GradedRational rational(const Rat& q);
    static GradedRational gen_m(int i);  // m_i, degree 2i
    static GradedRational term(MMono mono, Rat coeff);

    bool is_zero() const { return terms_.empty(); }
    // Topological degree; 0 for the zero element.
    long degree() const { return is_zero() ? 0 : deg_; }

    const std::map<MMono, Rat>& terms() const { return terms_; }

    GradedRational operator+(const GradedRational& o) const;
    GradedRational operator-(const GradedRational& o) const;
    GradedRational operator*(const GradedRational& o) const;
    GradedRational operator-() const;
    GradedRational& operator+=(const GradedRational& o) { return *this = *this + o; }
    GradedRational& operator-=(const GradedRational& o) { return *this = *this - o; }
    GradedRational& operator*=(const GradedRational& o) { return *this = *this * o; }
    GradedRational scaled(const Rat& q) const;

    bool operator==(const GradedRational& o) const { return terms_ == o.terms_; }
    bool operator!=(const GradedRational& o) const { return !(*this == o); }

    bool is_rational_constant() const;
    Rat as_rational() const;  // requires degree 0 (or zero)

    // Least common multiple of the coefficient denominators (1 for zero).
    Int denominator_lcm() const;

    std::string str() const;  // "3*m1^2 - 1/2*m2"

  private:
    std::map<MMono, Rat> terms_;
    long deg_ = 0;

    void insert(MMono mono, Rat coeff);
    friend GradedRational mul_impl(const GradedRational&, const GradedRational&);
};

}  // namespace cobord
