#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cobord/errors.hpp"
#include "cobord/series.hpp"

using namespace cobord;

TEST_CASE("monomials and ring operations") {
    Series x = Series::monomial(Convention::EulerWeights, 1, 0, GradedRational::one());
    Series u = Series::monomial(Convention::EulerWeights, 0, 1, GradedRational::one());
    CHECK(x.total_deg() == -2);
    Series s = x + u;
    Series sq = s * s;
    CHECK(sq.coeff(2, 0) == GradedRational::one());
    CHECK(sq.coeff(1, 1) == GradedRational::rational(Rat(2)));
    CHECK(sq.coeff(0, 2) == GradedRational::one());
    CHECK(sq.total_deg() == -4);
    CHECK((sq - sq).empty());
}

TEST_CASE("homogeneity of coefficients is enforced") {
    Series s(Convention::EulerWeights, 0);
    // at (0,1) the coefficient must have degree 2, not 0
    CHECK_THROWS_AS(s.set(0, 1, GradedRational::one()), DomainError);
    CHECK_NOTHROW(s.set(0, 1, GradedRational::gen_m(1)));
}

TEST_CASE("trust windows shrink under multiplication") {
    Series a = Series::monomial(Convention::EulerWeights, 0, 0, GradedRational::one());
    a.set_row_trust(0, 5);
    a.set_tail_trust(Series::TRUST_NONE);
    Series b = Series::monomial(Convention::EulerWeights, 0, 2, GradedRational::one());
    Series p = a * b;
    // floor of b is 2, so the product is exact only through 5 + 2
    CHECK(p.trust(0) == 7);
    CHECK(p.coeff(0, 2) == GradedRational::one());
}

TEST_CASE("shifted_u and truncation") {
    Series u = Series::monomial(Convention::EulerWeights, 0, 1, GradedRational::one());
    Series v = u.shifted_u(-3);
    CHECK(v.u_floor() <= -2);
    CHECK(v.coeff(0, -2) == GradedRational::one());
    Series t = (u + Series::monomial(Convention::EulerWeights, 2, 0, GradedRational::gen_m(1)))
                   .truncated(1, 10);
    CHECK(t.coeff(2, 0).is_zero());
    CHECK(t.coeff(0, 1) == GradedRational::one());
}

TEST_CASE("geometric inversion of a unit") {
    // s = u - x; 1/s = u^{-1} (1 + x/u + x^2/u^2 + ...)
    Series s = Series::monomial(Convention::EulerWeights, 0, 1, GradedRational::one()) -
               Series::monomial(Convention::EulerWeights, 1, 0, GradedRational::one());
    Series inv = s.inverted_unit();
    CHECK(inv.coeff(0, -1) == GradedRational::one());
    CHECK(inv.coeff(1, -2) == GradedRational::one());
    CHECK(inv.coeff(2, -3) == GradedRational::one());
    Series prod = s * inv;
    CHECK(prod.coeff(0, 0) == GradedRational::one());
    CHECK(prod.coeff(1, -1).is_zero());
}

TEST_CASE("compose substitutes into a univariate series") {
    // outer(t) = t + m1 t^2 applied to inner = x (graded, like exp/log)
    std::vector<GradedRational> outer = {GradedRational::zero(), GradedRational::one(),
                                         GradedRational::gen_m(1)};
    Series x = Series::monomial(Convention::EulerWeights, 1, 0, GradedRational::one());
    Series r = compose(outer, x);
    CHECK(r.coeff(1, 0) == GradedRational::one());
    CHECK(r.coeff(2, 0) == GradedRational::gen_m(1));
    CHECK(r.coeff(3, 0).is_zero());
}

TEST_CASE("antipode is involutive") {
    std::vector<GradedRational> b = {GradedRational::one(), GradedRational::gen_m(1),
                                     GradedRational::gen_m(2)};
    auto bb = antipode(antipode(b));
    REQUIRE(bb.size() >= b.size());
    for (size_t k = 0; k < b.size(); ++k) CHECK((bb[k] - b[k]).is_zero());
    // antipode(b) * b = 1 in low degrees
    auto ab = antipode(b);
    CHECK((ab[0] - GradedRational::one()).is_zero());
    CHECK((ab[1] + b[1]).is_zero());
}

TEST_CASE("agrees_with respects the trusted window only") {
    Series a = Series::monomial(Convention::EulerWeights, 0, 0, GradedRational::one());
    Series b = a;
    b.set_row_trust(0, 3);
    b.set_tail_trust(Series::TRUST_NONE);
    CHECK(a.agrees_with(b, 0, 3));
    // difference beyond trust is invisible
    Series c = b;
    CHECK(b.agrees_with(c, 0, 3));
}
