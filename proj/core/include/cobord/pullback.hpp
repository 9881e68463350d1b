#pragma once

#include <string>

#include "cobord/fgl.hpp"
#include "cobord/omega.hpp"
#include "cobord/series.hpp"
#include "cobord/target.hpp"

namespace cobord {

// Element of MU^{C_p}_* held as its image pair under the pullback square:
// a truncated rho-representative in MU_*[[u]]/[p]u and the exact kappa image
// in MU_*[u_i^{+-1}, d_l^{(i)}], plus the generator word that produced it.
// Homogeneous by construction; ring operations act componentwise.
struct PullbackElement {
    Series rho{Convention::EulerWeights, 0};
    TargetPoly kappa;
    std::string word;

    PullbackElement operator+(const PullbackElement& o) const;
    PullbackElement operator-(const PullbackElement& o) const;
    PullbackElement operator*(const PullbackElement& o) const;
    PullbackElement operator-() const;
    PullbackElement scaled(const GradedRational& c) const;
};

// Outcome of a pullback equality test: the kappa components must agree
// exactly, and the difference of rho representatives must be certified
// divisible by [p]u.
struct PullbackEquality {
    bool equal = false;
    bool kappa_ok = false;
    SeriesDivision rho_cert;
};

// Factory and comparison for PullbackElements over a fixed context.
class PullbackRing {
  public:
    explicit PullbackRing(const FGLContext& ctx) : ctx_(ctx), omega_(ctx) {}

    const FGLContext& ctx() const { return ctx_; }
    long prime() const { return ctx_.prime(); }

    PullbackElement zero() const;
    PullbackElement unit() const;
    PullbackElement constant(const GradedRational& c) const;
    PullbackElement u_elt() const;              // the Euler class u
    PullbackElement eta_elt(int i) const;       // eta_i, 1 <= i <= p-1
    PullbackElement q_elt(int j) const;         // q_j, j >= 0
    PullbackElement d_elt(int l, int j, int i) const;

    // rho on generators: q_j -> sum_k c_{j+k} u^k, d_{l,j}^{(i)} ->
    // sum_k t_{l,j+k}^{(i)} u^k, eta_i -> sum_k a_{0,1+k}^{(i)} u^k.
    Series rho_q(int j) const;
    Series rho_d(int l, int j, int i) const;
    Series rho_eta(int i) const;

    // phi into the u-localization: d_l^{(i)} -> sum_j t_{l,j}^{(i)} u^j,
    // u_i -> [i]u.
    Series phi_d(int l, int i) const;
    Series phi_u(int i) const;

    PullbackEquality equal(const PullbackElement& a, const PullbackElement& b) const;

  private:
    const FGLContext& ctx_;
    OmegaRing omega_;
};

}  // namespace cobord
