#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cobord/omega.hpp"

using namespace cobord;

namespace {
const FGLContext& ctx3() {
    static FGLContext c(3, 6);
    return c;
}
const OmegaRing& ring3() {
    static OmegaRing r(ctx3());
    return r;
}
}  // namespace

TEST_CASE("q_1^2 = p q_1") {
    const OmegaRing& R = ring3();
    auto lhs = R.multiply(R.q_elt(1), R.q_elt(1));
    CHECK(lhs == R.q_elt(1).scaled(GradedRational::integer(3)));
}

TEST_CASE("relation (22) instance: q_2^2 expansion") {
    const OmegaRing& R = ring3();
    const FGLContext& c = ctx3();
    // q_2(q_2 - c_2) = q_3(q_1 - c_1) => q_2^2 = c_3 q_1 + c_2 q_2 - p q_3
    auto lhs = R.multiply(R.q_elt(2), R.q_elt(2));
    auto rhs = R.q_elt(1).scaled(c.p_series_coeff(3)) + R.q_elt(2).scaled(c.p_series_coeff(2)) -
               R.q_elt(3).scaled(GradedRational::integer(3));
    CHECK(lhs == rhs);
}

TEST_CASE("excluded generator collapses to zero") {
    const OmegaRing& R = ring3();
    CHECK(R.d_elt(0, 4, 1).is_zero());
}

TEST_CASE("normal form is terminal on basis words and idempotent") {
    const OmegaRing& R = ring3();
    auto prod = R.multiply(R.d_elt(0, 1, 2), R.d_elt(0, 0, 2));
    REQUIRE(prod.terms().size() == 1);
    const auto& m = prod.terms().begin()->first;
    CHECK(m.kind == BasisMonomial::D);
    CHECK(m.j == 1);
    CHECK(R.normal_form(R.word_of(m)) == prod);
}

TEST_CASE("kappa generator formulas") {
    const OmegaRing& R = ring3();
    CHECK(R.kappa(R.q_elt(1)).is_zero());
    // kappa(q_2) = -p u^{-1}
    TargetPoly expect = TargetPoly::u_pow(3, 1, -1).scaled(GradedRational::integer(-3));
    CHECK(R.kappa(R.q_elt(2)) == expect);
    // kappa(d_{0,0}^{(2)}) = u_2^{-1} - 2 u^{-1}
    TargetPoly d2 = TargetPoly::u_pow(3, 2, -1) +
                    TargetPoly::u_pow(3, 1, -1).scaled(GradedRational::integer(-2));
    CHECK(R.kappa(R.d_elt(0, 0, 2)) == d2);
}

TEST_CASE("kappa is multiplicative on products") {
    const OmegaRing& R = ring3();
    auto a = R.d_elt(0, 1, 2);
    auto b = R.d_elt(1, 0, 2);
    CHECK(R.kappa(R.multiply(a, b)) == R.kappa(a) * R.kappa(b));
}

TEST_CASE("res on generators") {
    const OmegaRing& R = ring3();
    const FGLContext& c = ctx3();
    CHECK(R.res(R.q_elt(1)) == GradedRational::integer(3));
    CHECK(R.res(R.q_elt(2)) == c.p_series_coeff(2));
    CHECK(R.res(R.d_elt(1, 2, 2)) == c.t(2, 1, 2));
    CHECK(R.res(R.unit_elt()) == GradedRational::one());
}

TEST_CASE("multiplication is commutative and associative on samples") {
    const OmegaRing& R = ring3();
    auto a = R.q_elt(2);
    auto b = R.d_elt(0, 0, 2);
    auto c = R.d_elt(1, 0, 2);
    CHECK(R.multiply(a, b) == R.multiply(b, a));
    CHECK(R.multiply(R.multiply(a, b), c) == R.multiply(a, R.multiply(b, c)));
}

TEST_CASE("gamma satisfies its kappa contract") {
    const OmegaRing& R = ring3();
    auto contract = [&](const PresentationElement& x) {
        TargetPoly lhs = R.kappa(R.gamma(x));
        TargetPoly rhs = TargetPoly::u_pow(3, 1, -1) * R.kappa(x) +
                         TargetPoly::u_pow(3, 2, -1).scaled(R.res(x));
        return lhs == rhs;
    };
    CHECK(contract(R.unit_elt()));
    CHECK(contract(R.q_elt(1)));
    CHECK(contract(R.q_elt(3)));
    CHECK(contract(R.d_elt(1, 2, 2)));
    CHECK(contract(R.multiply(R.d_elt(0, 1, 2), R.d_elt(0, 0, 2))));
}

TEST_CASE("gamma on q_j matches the closed formula") {
    const OmegaRing& R = ring3();
    const FGLContext& c = ctx3();
    for (int j = 1; j <= 4; ++j) {
        auto base = R.d_elt(0, 0, 2) - R.q_elt(2);
        auto expect = base.scaled(c.p_series_coeff(j)) + R.q_elt(j + 1);
        CHECK(R.gamma(R.q_elt(j)) == expect);
    }
}

TEST_CASE("kernel_test recognizes exactly the q_1 line") {
    const OmegaRing& R = ring3();
    auto [ok1, c1] = R.kernel_test(R.q_elt(1).scaled(GradedRational::gen_m(1)));
    CHECK(ok1);
    CHECK(c1 == GradedRational::gen_m(1));
    auto [ok2, c2] = R.kernel_test(R.d_elt(0, 0, 2));
    CHECK_FALSE(ok2);
    auto [ok3, c3] = R.kernel_test(PresentationElement{});
    CHECK(ok3);
    CHECK(c3.is_zero());
}
