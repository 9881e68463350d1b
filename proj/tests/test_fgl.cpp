#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cobord/errors.hpp"
#include "cobord/fgl.hpp"

using namespace cobord;

namespace {
const FGLContext& ctx3() {
    static FGLContext c(3, 6);
    return c;
}
}  // namespace

TEST_CASE("exp and log pins") {
    const auto& c = ctx3();
    // exp t = t - m1 t^2 + (2 m1^2 - m2) t^3 + ...
    GradedRational m1 = GradedRational::gen_m(1), m2 = GradedRational::gen_m(2);
    CHECK((c.exp_coeffs()[2] + m1).is_zero());
    CHECK((c.exp_coeffs()[3] - (m1 * m1 * GradedRational::rational(Rat(2)) - m2)).is_zero());
    CHECK((c.fgl(1, 1) + m1 * GradedRational::rational(Rat(2))).is_zero());
}

TEST_CASE("p-series and unit pins") {
    const auto& c = ctx3();
    CHECK(c.p_series_coeff(0).is_zero());
    CHECK(c.p_series_coeff(1) == GradedRational::integer(3));
    for (int i = 1; i <= 2; ++i) {
        CHECK(c.shifted(i, 1, 0) == GradedRational::one());
        CHECK(c.shifted(i, 0, 1) == GradedRational::integer(i));
        CHECK(c.shifted(i, 0, 0).is_zero());
        CHECK(c.shifted(i, 2, 0).is_zero());
    }
}

TEST_CASE("t-table pins") {
    const auto& c = ctx3();
    for (int i = 1; i <= 2; ++i) {
        long iinv = c.inv_rep(i).first;
        CHECK(c.t(i, 0, -1) == GradedRational::integer(iinv));
    }
    CHECK((c.t(1, 1, -2) + GradedRational::one()).is_zero());
    for (int j = 0; j <= 5; ++j) CHECK(c.t(1, 0, j).is_zero());
}

TEST_CASE("inverse representatives") {
    const auto& c = ctx3();
    auto [inv2, k2] = c.inv_rep(2);
    CHECK(inv2 == 2);
    CHECK(2 * inv2 == 1 + 3 * k2);
}

TEST_CASE("integrality witnesses evaluate back") {
    const auto& c = ctx3();
    for (int j = 1; j <= 5; ++j) {
        auto w = c.c_witness(j);
        REQUIRE(w.has_value());
        CHECK((w->evaluate(c) - c.p_series_coeff(j)).is_zero());
    }
    // a rational that is not integral has no witness
    CHECK_FALSE(c.integrality_witness(GradedRational::gen_m(1)).has_value());
    // m1 = -a(1,1)/2 is not integral, but 2*m1 is
    auto w = c.integrality_witness(GradedRational::gen_m(1) * GradedRational::rational(Rat(2)));
    REQUIRE(w.has_value());
    CHECK((w->evaluate(c) - GradedRational::gen_m(1) * GradedRational::rational(Rat(2))).is_zero());
}

TEST_CASE("divide_by_p certifies exact division") {
    const auto& c = ctx3();
    GradedRational c2 = c.p_series_coeff(2);
    auto third = c.divide_by_p(c2);  // c_2 = -6 m1 is divisible by 3
    REQUIRE(third.has_value());
    CHECK((third->value * GradedRational::integer(3) - c2).is_zero());
    REQUIRE(third->witness.has_value());
    CHECK_FALSE(c.divide_by_p(GradedRational::one()).has_value());
}

TEST_CASE("accessors fail loudly outside the certified window") {
    const auto& c = ctx3();
    CHECK_THROWS_AS(c.t(1, 0, c.t_trust(1, 0) + 1), TruncationError);
    CHECK_THROWS_AS((void)c.p_series_coeff(c.table_order() + 1), TruncationError);
}

TEST_CASE("divide_by_p_series certifies [p]u | [p]u * s") {
    const auto& c = ctx3();
    Series pu = c.p_u_series(c.table_order());
    Series x = c.x_series();
    Series prod = pu * x;
    auto dv = c.divide_by_p_series(prod);
    REQUIRE(dv.ok);
    CHECK(dv.quotient.agrees_with(x, 1, 4));
    // and rejects a non-multiple: u itself (c_1 = p does not divide 1)
    Series u = Series::monomial(Convention::EulerWeights, 0, 1, GradedRational::one());
    auto bad = c.divide_by_p_series(u);
    CHECK_FALSE(bad.ok);
}

TEST_CASE("formal sum matches the coefficient table") {
    const auto& c = ctx3();
    Series x = c.x_series();
    Series u = Series::monomial(Convention::EulerWeights, 0, 1, GradedRational::one());
    Series f = c.fgl_sum(x, u);
    for (int k = 0; k <= 3; ++k)
        for (int j = 0; k + j <= 3; ++j) CHECK((f.coeff(k, j) - c.fgl(k, j)).is_zero());
}
