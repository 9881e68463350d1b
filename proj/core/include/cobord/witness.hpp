#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cobord/mpoly.hpp"

namespace cobord {

class FGLContext;

// Monomial in the integral generators a(k,j) of the coefficient ring
// (k <= j, k >= 1; a(k,j) has topological degree 2(k+j-1)).
// Stored as a sorted list of (generator, exponent) pairs.
struct AMono {
    std::vector<std::pair<std::pair<int, int>, int>> factors;

    long degree() const;  // topological
    bool operator<(const AMono& o) const { return factors < o.factors; }
    bool operator==(const AMono& o) const { return factors == o.factors; }
    std::string str() const;  // "a(1,1)^2*a(1,2)", "" for the unit
};

// Integer polynomial in the a(k,j): the witness format certifying that a
// rationally-represented element lies in the integral coefficient ring.
class APoly {
  public:
    APoly() = default;
    static APoly constant(Int n);
    static APoly generator(int k, int j);  // normalizes to k <= j

    bool is_zero() const { return terms_.empty(); }
    const std::map<AMono, Int>& terms() const { return terms_; }

    APoly operator+(const APoly& o) const;
    APoly operator-(const APoly& o) const;
    APoly operator*(const APoly& o) const;
    APoly operator-() const;
    APoly scaled(const Int& n) const;
    bool operator==(const APoly& o) const { return terms_ == o.terms_; }

    void add_term(AMono m, Int c);

    // Substitute each a(k,j) by its image in Q[m_1, m_2, ...].
    GradedRational evaluate(const FGLContext& ctx) const;

    std::string str() const;  // parseable by the expression grammar

  private:
    std::map<AMono, Int> terms_;
};

}  // namespace cobord
