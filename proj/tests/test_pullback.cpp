#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cobord/pullback.hpp"

using namespace cobord;

namespace {
const FGLContext& ctx3() {
    static FGLContext c(3, 6);
    return c;
}
const PullbackRing& pring() {
    static PullbackRing r(ctx3());
    return r;
}
}  // namespace

TEST_CASE("eta_1 equals 1 in the pullback") {
    const PullbackRing& P = pring();
    auto eq = P.equal(P.eta_elt(1), P.unit());
    CHECK(eq.kappa_ok);
    CHECK(eq.rho_cert.ok);
    CHECK(eq.equal);
}

TEST_CASE("u q_1 is zero: rho lands in [p]u") {
    const PullbackRing& P = pring();
    auto eq = P.equal(P.u_elt() * P.q_elt(1), P.zero());
    CHECK(eq.equal);
}

TEST_CASE("rho(q_0) = [p]u") {
    const PullbackRing& P = pring();
    const FGLContext& c = ctx3();
    Series r = P.rho_q(0);
    for (int j = 0; j <= 6; ++j) CHECK((r.coeff(0, j) - c.p_series_coeff(j)).is_zero());
    CHECK(P.equal(P.q_elt(0), P.zero()).equal);
}

TEST_CASE("eta_i is congruent to i modulo u") {
    const PullbackRing& P = pring();
    for (int i = 1; i <= 2; ++i)
        CHECK(P.rho_eta(i).coeff(0, 0) == GradedRational::integer(i));
}

TEST_CASE("relation (18) holds on both channels") {
    const PullbackRing& P = pring();
    const FGLContext& c = ctx3();
    for (int i = 1; i <= 2; ++i) {
        auto [iinv, ki] = c.inv_rep(i);
        auto lhs = P.eta_elt(i) *
                   (P.u_elt() * P.d_elt(0, 0, i) + P.constant(GradedRational::integer(iinv)));
        auto rhs = P.unit() + P.q_elt(1).scaled(GradedRational::integer(ki));
        auto eq = P.equal(lhs, rhs);
        CHECK(eq.kappa_ok);
        CHECK(eq.rho_cert.ok);
    }
}

TEST_CASE("phi on generators") {
    const PullbackRing& P = pring();
    const FGLContext& c = ctx3();
    // phi(u_i) = [i]u
    Series f1 = P.phi_u(1);
    CHECK(f1.coeff(0, 1) == GradedRational::one());
    CHECK(f1.coeff(0, 2).is_zero());
    Series f2 = P.phi_u(2);
    CHECK(f2.coeff(0, 1) == GradedRational::integer(2));
    // phi(d_0^{(1)}) = u^{-1}: row 0 of the i=1 t-table is u^{-1} on the nose
    Series d01 = P.phi_d(0, 1);
    CHECK(d01.coeff(0, -1) == GradedRational::one());
    for (int j = 0; j <= 4; ++j) CHECK(d01.coeff(0, j).is_zero());
    // phi(d_l^{(i)}) coefficients are the t-table entries
    Series d12 = P.phi_d(1, 2);
    for (int j = -2; j <= 3; ++j) CHECK((d12.coeff(0, j) - c.t(2, 1, j)).is_zero());
}

TEST_CASE("equality is a congruence for the ring operations") {
    const PullbackRing& P = pring();
    // (u q_1) * d_{0,0}^{(2)} still vanishes
    auto x = (P.u_elt() * P.q_elt(1)) * P.d_elt(0, 0, 2);
    CHECK(P.equal(x, P.zero()).equal);
    // and adding (a degree-matched integral multiple of) zero changes nothing
    auto y = P.d_elt(0, 1, 2) + x.scaled(ctx3().fgl(1, 2));
    CHECK(P.equal(y, P.d_elt(0, 1, 2)).equal);
}
