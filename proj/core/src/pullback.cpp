#include "cobord/pullback.hpp"

#include "cobord/errors.hpp"

namespace cobord {

PullbackElement PullbackElement::operator+(const PullbackElement& o) const {
    return {rho + o.rho, kappa + o.kappa, "(" + word + " + " + o.word + ")"};
}

PullbackElement PullbackElement::operator-(const PullbackElement& o) const {
    return {rho - o.rho, kappa - o.kappa, "(" + word + " - " + o.word + ")"};
}

PullbackElement PullbackElement::operator*(const PullbackElement& o) const {
    return {rho * o.rho, kappa * o.kappa, word + "*" + o.word};
}

PullbackElement PullbackElement::operator-() const {
    return {-rho, -kappa, "-" + word};
}

PullbackElement PullbackElement::scaled(const GradedRational& c) const {
    return {rho.scaled(c), kappa.scaled(c), "(" + c.str() + ")*" + word};
}

PullbackElement PullbackRing::zero() const {
    return {Series::zero(Convention::EulerWeights, 0), TargetPoly::zero(prime()), "0"};
}

PullbackElement PullbackRing::unit() const {
    return {Series::unit(Convention::EulerWeights), TargetPoly::unit(prime()), "1"};
}

PullbackElement PullbackRing::constant(const GradedRational& c) const {
    if (c.is_zero()) return zero();
    return {Series::monomial(Convention::EulerWeights, 0, 0, c),
            TargetPoly::constant(prime(), c), "(" + c.str() + ")"};
}

PullbackElement PullbackRing::u_elt() const {
    return {Series::monomial(Convention::EulerWeights, 0, 1, GradedRational::one()),
            TargetPoly::u_pow(prime(), 1, 1), "u"};
}

Series PullbackRing::rho_q(int j) const {
    int T = ctx_.table_order();
    if (j < 0 || j > T) throw DomainError("rho(q_j): index out of table range");
    Series s(Convention::EulerWeights, 2L * (j - 1));
    for (int k = 0; j + k <= T; ++k) s.set(0, k, ctx_.p_series_coeff(j + k));
    s.set_row_trust(0, T - j);
    return s;
}

Series PullbackRing::rho_d(int l, int j, int i) const {
    if (l < 0 || j < 0) throw DomainError("rho(d): negative index");
    int tr = ctx_.t_trust(i, l);
    if (j > tr) throw DomainError("rho(d): offset beyond trusted t-window");
    Series s(Convention::EulerWeights, 2L * (l + j + 1));
    for (int k = 0; j + k <= tr; ++k) s.set(0, k, ctx_.t(i, l, j + k));
    s.set_row_trust(0, tr - j);
    return s;
}

Series PullbackRing::rho_eta(int i) const {
    int T = ctx_.table_order();
    Series s(Convention::EulerWeights, 0);
    for (int k = 0; 1 + k <= T; ++k) s.set(0, k, ctx_.shifted(i, 0, 1 + k));
    s.set_row_trust(0, T - 1);
    return s;
}

Series PullbackRing::phi_d(int l, int i) const { return ctx_.t_row(i, l); }

Series PullbackRing::phi_u(int i) const { return ctx_.n_series(i, ctx_.table_order()); }

PullbackElement PullbackRing::eta_elt(int i) const {
    long p = prime();
    if (i < 1 || i >= p) throw DomainError("eta_i: index out of range");
    TargetPoly k = TargetPoly::u_pow(p, 1, -1) * TargetPoly::u_pow(p, i, 1);
    return {rho_eta(i), std::move(k), "eta(" + std::to_string(i) + ")"};
}

PullbackElement PullbackRing::q_elt(int j) const {
    return {rho_q(j), omega_.kappa_gen_q(j), "q(" + std::to_string(j) + ")"};
}

PullbackElement PullbackRing::d_elt(int l, int j, int i) const {
    return {rho_d(l, j, i), omega_.kappa_gen_d(l, j, i),
            "d(" + std::to_string(l) + "," + std::to_string(j) + "," + std::to_string(i) + ")"};
}

PullbackEquality PullbackRing::equal(const PullbackElement& a, const PullbackElement& b) const {
    PullbackEquality r;
    r.kappa_ok = (a.kappa == b.kappa);
    Series diff = a.rho - b.rho;
    if (diff.empty()) {
        r.rho_cert.ok = true;
        r.rho_cert.quotient = Series::zero(diff.conv(), 0);
    } else {
        r.rho_cert = ctx_.divide_by_p_series(diff);
    }
    r.equal = r.kappa_ok && r.rho_cert.ok;
    return r;
}

}  // namespace cobord
