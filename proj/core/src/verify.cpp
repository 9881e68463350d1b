#include "cobord/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "cobord/expr.hpp"
#include "json.hpp"

namespace cobord {

namespace {

using Task = std::function<std::vector<RelationReport>()>;

std::vector<RelationReport> run_tasks(std::vector<Task>& tasks) {
    int nthreads = std::min<int>(verify_thread_count(), static_cast<int>(tasks.size()));
    std::vector<std::vector<RelationReport>> slots(tasks.size());
    if (nthreads <= 1) {
        for (size_t k = 0; k < tasks.size(); ++k) slots[k] = tasks[k]();
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t k = next.fetch_add(1); k < tasks.size(); k = next.fetch_add(1))
                slots[k] = tasks[k]();
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<RelationReport> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    sort_reports(out);
    return out;
}

// kappa + rho-mod-[p]u reports for one MU-presentation identity.
std::vector<RelationReport> mu_instance(const PullbackRing& P, const std::string& id,
                                        std::vector<std::pair<std::string, long>> idx,
                                        const PullbackElement& lhs, const PullbackElement& rhs) {
    auto eq = P.equal(lhs, rhs);
    RelationReport rk{id, idx, "kappa", eq.kappa_ok,
                      eq.kappa_ok ? "exact" : "kappa images differ: " + lhs.word + " vs " + rhs.word};
    std::string rd;
    if (eq.rho_cert.ok) {
        rd = "certified multiple of [p]u";
    } else {
        rd = "division failed at (l=" + std::to_string(eq.rho_cert.fail_l) +
             ", j=" + std::to_string(eq.rho_cert.fail_j) + "): " + eq.rho_cert.reason;
    }
    RelationReport rr{id, std::move(idx), "rho-mod-pu", eq.rho_cert.ok, rd};
    return {std::move(rk), std::move(rr)};
}

// normal-form + kappa reports for one Omega-presentation identity.
std::vector<RelationReport> omega_instance(const OmegaRing& R, const std::string& id,
                                           std::vector<std::pair<std::string, long>> idx,
                                           const PresentationElement& lhs,
                                           const PresentationElement& rhs) {
    bool nf_ok = (lhs == rhs);
    std::string nd = nf_ok ? "identical normal forms"
                           : "normal forms differ: " + lhs.str() + " vs " + rhs.str();
    bool k_ok = (R.kappa(lhs) == R.kappa(rhs));
    RelationReport rn{id, idx, "normal-form", nf_ok, std::move(nd)};
    RelationReport rk{id, std::move(idx), "kappa", k_ok, k_ok ? "exact" : "kappa images differ"};
    return {std::move(rn), std::move(rk)};
}

GradedRational int_coeff(long n) { return GradedRational::integer(n); }

}  // namespace

int verify_thread_count() {
    if (const char* env = std::getenv("COBORDISM_FORGE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

std::vector<BasisMonomial> basis_monomials(const OmegaRing& ring, long max_degree) {
    long p = ring.prime();
    std::vector<BasisMonomial> out;
    out.push_back(BasisMonomial::unit());
    for (int k = 1; 2L * (k - 1) <= max_degree; ++k) out.push_back(BasisMonomial::q(k));

    std::vector<std::pair<int, int>> gens;  // (l, i) with weight 2(l+1)
    for (int l = 0; 2L * (l + 1) <= max_degree; ++l)
        for (int i = 1; i <= p - 1; ++i)
            if (!(l == 0 && i == 1)) gens.push_back({l, i});

    std::vector<std::pair<int, int>> cur;
    std::function<void(size_t, long)> rec = [&](size_t from, long budget) {
        if (!cur.empty())
            for (int j = 0; 2L * j <= budget; ++j) out.push_back(BasisMonomial::d(cur, j));
        for (size_t g = from; g < gens.size(); ++g) {
            long w = 2L * (gens[g].first + 1);
            if (w > budget) continue;
            cur.push_back(gens[g]);
            rec(g, budget - w);
            cur.pop_back();
        }
    };
    rec(0, max_degree);
    std::sort(out.begin(), out.end());
    return out;
}

PresentationElement random_homogeneous(const OmegaRing& ring, long degree, std::mt19937_64& rng) {
    auto basis = basis_monomials(ring, degree);
    std::vector<BasisMonomial> fits;
    for (const auto& m : basis)
        if ((degree - m.degree()) % 2 == 0 && m.degree() <= degree) fits.push_back(m);
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> height(-9, 9);
    PresentationElement x;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        const auto& m = fits[std::uniform_int_distribution<size_t>(0, fits.size() - 1)(rng)];
        int half = static_cast<int>((degree - m.degree()) / 2);
        auto monos = weight_monomials(half);
        const auto& w = monos[std::uniform_int_distribution<size_t>(0, monos.size() - 1)(rng)];
        int c = height(rng);
        if (c == 0) c = 1;
        x.add_term(m, GradedRational::term(w, Rat(c)));
    }
    return x;
}

std::vector<RelationReport> verify_mu_presentation(const FGLContext& ctx) {
    long p = ctx.prime();
    int D = ctx.truncation();
    PullbackRing P(ctx);
    std::vector<Task> tasks;

    // (13): d_{l,j} - t_{l,j} = u d_{l,j+1}
    for (int i = 1; i <= p - 1; ++i)
        for (int l = 0; l <= D; ++l)
            for (int j = 0; l + j + 1 <= D; ++j)
                tasks.push_back([&P, &ctx, i, l, j] {
                    auto lhs = P.d_elt(l, j, i) - P.constant(ctx.t(i, l, j));
                    auto rhs = P.u_elt() * P.d_elt(l, j + 1, i);
                    return mu_instance(P, "eq13", {{"i", i}, {"l", l}, {"j", j}}, lhs, rhs);
                });
    // (14): d_{0,j}^{(1)} = 0
    for (int j = 0; j + 1 <= D; ++j)
        tasks.push_back([&P, j] {
            return mu_instance(P, "eq14", {{"j", j}}, P.d_elt(0, j, 1), P.zero());
        });
    // (15): q_j - c_j = u q_{j+1}
    for (int j = 0; j <= D; ++j)
        tasks.push_back([&P, &ctx, j] {
            auto lhs = P.q_elt(j) - P.constant(ctx.p_series_coeff(j));
            return mu_instance(P, "eq15", {{"j", j}}, lhs, P.u_elt() * P.q_elt(j + 1));
        });
    // (16): q_0 = 0
    tasks.push_back([&P] { return mu_instance(P, "eq16", {}, P.q_elt(0), P.zero()); });
    // (17): eta_1 = 1
    tasks.push_back([&P] { return mu_instance(P, "eq17", {}, P.eta_elt(1), P.unit()); });
    // (18): eta_i (u d_{0,0}^{(i)} + i^{-1}) = 1 + k_i q_1
    for (int i = 1; i <= p - 1; ++i)
        tasks.push_back([&P, &ctx, i] {
            auto [iinv, ki] = ctx.inv_rep(i);
            auto lhs = P.eta_elt(i) * (P.u_elt() * P.d_elt(0, 0, i) + P.constant(int_coeff(iinv)));
            auto rhs = P.unit() + P.q_elt(1).scaled(int_coeff(ki));
            return mu_instance(P, "eq18", {{"i", i}}, lhs, rhs);
        });
    // (19): eta_i q_1 = i q_1
    for (int i = 1; i <= p - 1; ++i)
        tasks.push_back([&P, i] {
            return mu_instance(P, "eq19", {{"i", i}}, P.eta_elt(i) * P.q_elt(1),
                               P.q_elt(1).scaled(int_coeff(i)));
        });
    // Lemma 3.8: eta_i = i mod u
    for (int i = 1; i <= p - 1; ++i)
        tasks.push_back([&P, i]() -> std::vector<RelationReport> {
            GradedRational c0 = P.rho_eta(i).coeff(0, 0);
            bool ok = (c0 == int_coeff(i));
            return {{"lemma3.8",
                     {{"i", i}},
                     "rho-mod-pu",
                     ok,
                     ok ? "constant term equals i" : "constant term " + c0.str()}};
        });
    return run_tasks(tasks);
}

std::vector<RelationReport> verify_omega_presentation(const FGLContext& ctx) {
    long p = ctx.prime();
    int D = ctx.truncation();
    auto ring = std::make_shared<OmegaRing>(ctx);
    std::vector<Task> tasks;
    auto q_or_zero = [](const OmegaRing& R, int k) {
        return k == 0 ? PresentationElement{} : R.q_elt(k);
    };

    // (20): d_{l,j+1}^{(i)}(d_{k,s}^{(i')} - t_{k,s}^{(i')}) = d_{k,s+1}^{(i')}(d_{l,j}^{(i)} - t_{l,j}^{(i)})
    for (int i = 1; i <= p - 1; ++i)
        for (int ip = 1; ip <= p - 1; ++ip)
            for (int l = 0; l <= D - 3; ++l)
                for (int j = 0; l + j <= D - 3; ++j)
                    for (int k = 0; l + j + k <= D - 3; ++k)
                        for (int s = 0; l + j + k + s <= D - 3; ++s) {
                            if (std::tie(i, l, j) > std::tie(ip, k, s)) continue;  // symmetric
                            tasks.push_back([ring, &ctx, i, ip, l, j, k, s] {
                                const OmegaRing& R = *ring;
                                auto unit = R.unit_elt();
                                auto lhs = R.multiply(
                                    R.d_elt(l, j + 1, i),
                                    R.d_elt(k, s, ip) - unit.scaled(ctx.t(ip, k, s)));
                                auto rhs = R.multiply(
                                    R.d_elt(k, s + 1, ip),
                                    R.d_elt(l, j, i) - unit.scaled(ctx.t(i, l, j)));
                                return omega_instance(
                                    R, "eq20",
                                    {{"i", i}, {"ip", ip}, {"j", j}, {"k", k}, {"l", l}, {"s", s}},
                                    lhs, rhs);
                            });
                        }
    // (21): d_{l,j+1}^{(i)}(q_k - c_k) = q_{k+1}(d_{l,j}^{(i)} - t_{l,j}^{(i)})
    for (int i = 1; i <= p - 1; ++i)
        for (int l = 0; l <= D - 1; ++l)
            for (int j = 0; l + j + 1 <= D - 1; ++j)
                for (int k = 0; l + j + k + 1 <= D - 1; ++k)
                    tasks.push_back([ring, &ctx, &q_or_zero, i, l, j, k] {
                        const OmegaRing& R = *ring;
                        auto unit = R.unit_elt();
                        auto lhs = R.multiply(R.d_elt(l, j + 1, i),
                                              q_or_zero(R, k) - unit.scaled(ctx.p_series_coeff(k)));
                        auto rhs = R.multiply(R.q_elt(k + 1),
                                              R.d_elt(l, j, i) - unit.scaled(ctx.t(i, l, j)));
                        return omega_instance(R, "eq21", {{"i", i}, {"j", j}, {"k", k}, {"l", l}},
                                              lhs, rhs);
                    });
    // (22): q_{j+1}(q_k - c_k) = q_{k+1}(q_j - c_j)
    for (int j = 0; j <= D; ++j)
        for (int k = j; j + k <= D; ++k)
            tasks.push_back([ring, &ctx, &q_or_zero, j, k] {
                const OmegaRing& R = *ring;
                auto unit = R.unit_elt();
                auto lhs = R.multiply(R.q_elt(j + 1),
                                      q_or_zero(R, k) - unit.scaled(ctx.p_series_coeff(k)));
                auto rhs = R.multiply(R.q_elt(k + 1),
                                      q_or_zero(R, j) - unit.scaled(ctx.p_series_coeff(j)));
                return omega_instance(R, "eq22", {{"j", j}, {"k", k}}, lhs, rhs);
            });
    // (23): q_0 = 0 (the engine has no q_0; assert the convention)
    tasks.push_back([ring, &q_or_zero] {
        return omega_instance(*ring, "eq23", {}, q_or_zero(*ring, 0), PresentationElement{});
    });
    // (24): d_{0,j}^{(1)} = 0
    for (int j = 0; j + 1 <= D; ++j)
        tasks.push_back([ring, j] {
            return omega_instance(*ring, "eq24", {{"j", j}}, ring->d_elt(0, j, 1),
                                  PresentationElement{});
        });
    // (25): q_1 (q_k - c_k) = 0
    for (int k = 0; k <= D + 1; ++k)
        tasks.push_back([ring, &ctx, &q_or_zero, k] {
            const OmegaRing& R = *ring;
            auto lhs = R.multiply(R.q_elt(1),
                                  q_or_zero(R, k) - R.unit_elt().scaled(ctx.p_series_coeff(k)));
            return omega_instance(R, "eq25", {{"k", k}}, lhs, PresentationElement{});
        });
    // (26): q_1 (d_{l,j}^{(i)} - t_{l,j}^{(i)}) = 0
    for (int i = 1; i <= p - 1; ++i)
        for (int l = 0; l <= D - 1; ++l)
            for (int j = 0; l + j + 1 <= D; ++j)
                tasks.push_back([ring, &ctx, i, l, j] {
                    const OmegaRing& R = *ring;
                    auto lhs = R.multiply(R.q_elt(1),
                                          R.d_elt(l, j, i) - R.unit_elt().scaled(ctx.t(i, l, j)));
                    return omega_instance(R, "eq26", {{"i", i}, {"j", j}, {"l", l}}, lhs,
                                          PresentationElement{});
                });
    return run_tasks(tasks);
}

std::vector<RelationReport> verify_basis(const FGLContext& ctx, unsigned long long seed) {
    long p = ctx.prime();
    int D = ctx.truncation();
    OmegaRing R(ctx);
    std::vector<RelationReport> out;

    // (a) leading-monomial distinctness of kappa (q_1 excepted: kappa(q_1)=0)
    auto basis = basis_monomials(R, 2L * D);
    std::map<TargetMono, BasisMonomial> leading;
    bool distinct = true;
    std::string clash;
    for (const auto& m : basis) {
        PresentationElement e;
        e.add_term(m, GradedRational::one());
        TargetPoly img = R.kappa(e);
        if (m.kind == BasisMonomial::Q && m.k == 1) {
            if (!img.is_zero()) {
                distinct = false;
                clash = "kappa(q_1) != 0";
            }
            continue;
        }
        if (img.is_zero()) {
            distinct = false;
            clash = "kappa vanishes on basis monomial " + m.str();
            continue;
        }
        const TargetMono& lm = img.leading_monomial();
        auto [it, fresh] = leading.emplace(lm, m);
        if (!fresh) {
            distinct = false;
            clash = "leading monomials collide: " + m.str() + " and " + it->second.str();
        }
    }
    out.push_back({"basis.lm-distinct",
                   {{"count", static_cast<long>(basis.size())}},
                   "kappa",
                   distinct,
                   distinct ? "distinct on all basis monomials up to degree 2D" : clash});

    // (b) random integral combinations vanish iff all coefficients do
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> height(-9, 9);
    for (int sample = 0; sample < 50; ++sample) {
        // homogeneous combinations only: kappa adds per-degree
        long deg = 2L * std::uniform_int_distribution<int>(0, D)(rng);
        std::vector<BasisMonomial> fits;
        for (const auto& m : basis)
            if (m.degree() <= deg && (deg - m.degree()) % 2 == 0) fits.push_back(m);
        std::uniform_int_distribution<size_t> pick(0, fits.size() - 1);
        int nterms = std::uniform_int_distribution<int>(0, 4)(rng);
        PresentationElement x;
        bool all_zero = true;
        for (int t = 0; t < nterms; ++t) {
            int c = height(rng);
            if (c != 0) all_zero = false;
            const auto& m = fits[pick(rng)];
            auto monos = weight_monomials(static_cast<int>((deg - m.degree()) / 2));
            const auto& w = monos[std::uniform_int_distribution<size_t>(0, monos.size() - 1)(rng)];
            x.add_term(m, GradedRational::term(w, Rat(c)));
        }
        bool zero_ok = all_zero ? x.is_zero() : true;
        auto [is_ker, kcoeff] = R.kernel_test(x);
        bool kappa_zero = R.kappa(x).is_zero();
        bool agree = (kappa_zero == is_ker) && zero_ok;
        if (is_ker && !kcoeff.is_zero() && x.is_zero()) agree = false;
        out.push_back({"basis.random-combination",
                       {{"sample", sample}},
                       "kappa",
                       agree,
                       "seed=" + std::to_string(seed) + (agree ? "" : " mismatch: " + x.str())});
    }

    // (c) res(q_1) = p and q_1 is torsion-free under random nonzero w
    GradedRational rq1 = R.res(R.q_elt(1));
    bool resp = (rq1 == int_coeff(p));
    out.push_back({"basis.res-q1", {}, "normal-form", resp, "res(q_1) = " + rq1.str()});
    for (int sample = 0; sample < 20; ++sample) {
        int half = std::uniform_int_distribution<int>(0, D)(rng);
        auto monos = weight_monomials(half);
        const auto& w = monos[std::uniform_int_distribution<size_t>(0, monos.size() - 1)(rng)];
        int c = height(rng);
        if (c == 0) c = 1;
        GradedRational wc = GradedRational::term(w, Rat(c));
        GradedRational img = R.res(R.q_elt(1).scaled(wc));
        bool ok = (img == wc * int_coeff(p)) && !img.is_zero();
        out.push_back({"basis.q1-torsion-free",
                       {{"sample", sample}},
                       "normal-form",
                       ok,
                       "seed=" + std::to_string(seed)});
    }
    sort_reports(out);
    return out;
}

std::vector<RelationReport> verify_gamma(const FGLContext& ctx, unsigned long long seed) {
    long p = ctx.prime();
    int D = ctx.truncation();
    auto ring = std::make_shared<OmegaRing>(ctx);
    auto basis = basis_monomials(*ring, 2L * D - 2);
    std::vector<Task> tasks;
    for (size_t n = 0; n < basis.size(); ++n)
        tasks.push_back([ring, &basis, n, p]() -> std::vector<RelationReport> {
            const OmegaRing& R = *ring;
            const BasisMonomial& m = basis[n];
            PresentationElement x;
            x.add_term(m, GradedRational::one());
            TargetPoly lhs = R.kappa(R.gamma(x));
            TargetPoly rhs = TargetPoly::u_pow(p, 1, -1) * R.kappa(x) +
                             TargetPoly::u_pow(p, static_cast<int>(p - 1), -1).scaled(R.res(x));
            bool ok = (lhs == rhs);
            return {{"gamma.contract",
                     {{"n", static_cast<long>(n)}},
                     "kappa",
                     ok,
                     ok ? "basis " + m.str() : "contract fails on " + m.str()}};
        });
    // additivity spot checks on random homogeneous pairs
    std::mt19937_64 rng(seed);
    for (int sample = 0; sample < 10; ++sample) {
        long deg = 2L * std::uniform_int_distribution<int>(0, D - 1)(rng);
        PresentationElement x = random_homogeneous(*ring, deg, rng);
        PresentationElement y = random_homogeneous(*ring, deg, rng);
        tasks.push_back([ring, x, y, sample, seed]() -> std::vector<RelationReport> {
            bool ok = ring->gamma(x + y) == ring->gamma(x) + ring->gamma(y);
            return {{"gamma.additivity",
                     {{"sample", sample}},
                     "normal-form",
                     ok,
                     "seed=" + std::to_string(seed)}};
        });
    }
    return run_tasks(tasks);
}

namespace {

struct IvResult {
    bool indices_ok = true;   // (31) divisible, (32) certified
    bool kappa_ok = false;
    std::string n_str, m_str, claimed, target, detail;
};

// Lemma 5.4(iv) with explicit inverse representatives (to probe the pin).
IvResult check_iv(const FGLContext& ctx, const OmegaRing& R, int i, long iinv, long im1inv,
                  long pminv, long pm1inv) {
    long p = ctx.prime();
    IvResult res;
    // (31): p N = (p-i+1)^{-1}(p-i)^{-1} + i^{-1} + (p-1)(i-1)^{-1}
    Int nrhs = Int(pm1inv) * pminv + iinv + Int(p - 1) * im1inv;
    if (nrhs % p != 0) {
        res.indices_ok = false;
        res.detail = "right side of (31) = " + nrhs.get_str() + " not divisible by p";
        return res;
    }
    Int N = nrhs / p;
    res.n_str = N.get_str();
    // (32): p M = (p-i)^{-1} t_{0,0}^{(p-i+1)} + (i-1)^{-1} t_{0,0}^{(p-1)}
    //           + (p-i+1)^{-1} t_{0,0}^{(p-i)} + t_{0,0}^{(i)} + (p-1) t_{0,0}^{(i-1)} - N c_2
    GradedRational mrhs = ctx.t(static_cast<int>(p - i + 1), 0, 0) * int_coeff(pminv) +
                          ctx.t(static_cast<int>(p - 1), 0, 0) * int_coeff(im1inv) +
                          ctx.t(static_cast<int>(p - i), 0, 0) * int_coeff(pm1inv) +
                          ctx.t(i, 0, 0) + ctx.t(i - 1, 0, 0) * int_coeff(p - 1) -
                          ctx.p_series_coeff(2) * GradedRational::rational(Rat(N));
    auto M = ctx.divide_by_p(mrhs);
    if (!M) {
        res.indices_ok = false;
        res.detail = "right side of (32) not certified divisible by p";
        return res;
    }
    res.m_str = M->witness ? M->witness->str() : "rational-form{" + M->value.str() + "}";
    // claimed element
    auto unit = R.unit_elt();
    PresentationElement claimed =
        R.multiply(R.d_elt(0, 0, static_cast<int>(p - 1)), R.d_elt(0, 0, i - 1)) +
        R.d_elt(0, 1, static_cast<int>(p - 1)).scaled(int_coeff(im1inv)) +
        R.multiply(R.d_elt(0, 0, static_cast<int>(p - i + 1)), R.d_elt(0, 0, static_cast<int>(p - i))) +
        R.d_elt(0, 1, static_cast<int>(p - i + 1)).scaled(int_coeff(pminv)) +
        R.d_elt(0, 1, static_cast<int>(p - i)).scaled(int_coeff(pm1inv)) + R.d_elt(0, 1, i) +
        R.d_elt(0, 1, i - 1).scaled(int_coeff(p - 1)) -
        R.q_elt(3).scaled(GradedRational::rational(Rat(N))) - R.q_elt(2).scaled(M->value);
    TargetPoly target =
        TargetPoly::u_pow(p, 1, -1) * TargetPoly::u_pow(p, i, -1) +
        TargetPoly::u_pow(p, static_cast<int>(p - 1), -1) * TargetPoly::u_pow(p, i - 1, -1) +
        TargetPoly::u_pow(p, static_cast<int>(p - i), -1) *
            TargetPoly::u_pow(p, static_cast<int>(p - i + 1), -1);
    res.kappa_ok = (R.kappa(claimed) == target);
    res.claimed = print_element(claimed, ctx);
    res.target = target.str();
    return res;
}

}  // namespace

std::vector<KosniowskiEntry> kosniowski_catalog(const FGLContext& ctx) {
    long p = ctx.prime();
    OmegaRing R(ctx);
    std::vector<KosniowskiEntry> out;

    // (i): C_p = q_1, geometric fixed points vanish
    {
        KosniowskiEntry e;
        e.tag = "C_p";
        PresentationElement q1 = R.q_elt(1);
        e.claimed = print_element(q1, ctx);
        e.target = "0";
        e.pass = R.kappa(q1).is_zero();
        e.detail = e.pass ? "kappa(q_1) = 0" : "kappa(q_1) != 0";
        out.push_back(std::move(e));
    }
    // (ii): S_i = d_{0,0}^{(i)} - q_2, image u_i^{-1} + (p - i^{-1}) u^{-1}
    for (int i = 1; i <= (p - 1) / 2; ++i) {
        KosniowskiEntry e;
        e.tag = "S_i";
        e.i = i;
        PresentationElement claimed = R.d_elt(0, 0, i) - R.q_elt(2);
        long iinv = ctx.inv_rep(i).first;
        TargetPoly target = TargetPoly::u_pow(p, i, -1) +
                            TargetPoly::u_pow(p, 1, -1).scaled(int_coeff(p - iinv));
        e.claimed = print_element(claimed, ctx);
        e.target = target.str();
        e.pass = (R.kappa(claimed) == target);
        e.detail = e.pass ? "exact kappa match" : "kappa mismatch";
        out.push_back(std::move(e));
    }
    // (iii): CP(1_0,1_i) = d_{0,0}^{(p-i)} + d_{0,0}^{(i)} - q_2, image u_{p-i}^{-1} + u_i^{-1}
    for (int i = static_cast<int>((p + 1) / 2); i <= p - 1; ++i) {
        KosniowskiEntry e;
        e.tag = "CP(1_0,1_i)";
        e.i = i;
        PresentationElement claimed =
            R.d_elt(0, 0, static_cast<int>(p - i)) + R.d_elt(0, 0, i) - R.q_elt(2);
        TargetPoly target =
            TargetPoly::u_pow(p, static_cast<int>(p - i), -1) + TargetPoly::u_pow(p, i, -1);
        e.claimed = print_element(claimed, ctx);
        e.target = target.str();
        e.pass = (R.kappa(claimed) == target);
        e.detail = e.pass ? "exact kappa match" : "kappa mismatch";
        out.push_back(std::move(e));
    }
    // (iv): CP(1_0,1_1,1_i) for 1 < i <= (p-1)/2, with N_{p,i}, M_{p,i}
    for (int i = 2; i <= (p - 1) / 2; ++i) {
        KosniowskiEntry e;
        e.tag = "CP(1_0,1_1,1_i)";
        e.i = i;
        long iinv = ctx.inv_rep(i).first;
        long im1inv = ctx.inv_rep(i - 1).first;
        long pminv = ctx.inv_rep(static_cast<int>(p - i)).first;
        long pm1inv = ctx.inv_rep(static_cast<int>(p - i + 1)).first;
        IvResult base = check_iv(ctx, R, i, iinv, im1inv, pminv, pm1inv);
        e.claimed = base.claimed;
        e.target = base.target;
        e.n_value = base.n_str;
        e.m_value = base.m_str;
        e.pass = base.indices_ok && base.kappa_ok;
        if (e.pass) {
            e.detail = "exact kappa match; (31)-(32) certified";
        } else if (!base.indices_ok) {
            e.detail = base.detail;
        } else {
            // Distinguish a paper typo from an inverse-representative mismatch
            // by retrying with representatives shifted by +p.
            bool alt_found = false;
            std::string alt;
            for (int mask = 1; mask < 16 && !alt_found; ++mask) {
                IvResult r = check_iv(ctx, R, i, iinv + (mask & 1 ? p : 0),
                                      im1inv + (mask & 2 ? p : 0), pminv + (mask & 4 ? p : 0),
                                      pm1inv + (mask & 8 ? p : 0));
                if (r.indices_ok && r.kappa_ok) {
                    alt_found = true;
                    alt = "mask=" + std::to_string(mask);
                }
            }
            e.detail = alt_found
                           ? "kappa mismatch under the pinned inverses; alternative "
                             "representatives succeed (" + alt + ") - representative mismatch"
                           : "kappa mismatch under all inverse representatives - paper-typo candidate";
        }
        out.push_back(std::move(e));
    }
    // Gamma iterates of a point: Gamma^m(pt), checked through the kappa contract
    {
        PresentationElement x = R.unit_elt();
        for (long m = 1; m <= 3; ++m) {
            KosniowskiEntry e;
            e.tag = "Gamma^m(pt)";
            e.m = m;
            GradedRational rx = R.res(x);
            TargetPoly expect = TargetPoly::u_pow(p, 1, -1) * R.kappa(x) +
                                TargetPoly::u_pow(p, static_cast<int>(p - 1), -1).scaled(rx);
            PresentationElement gx = R.gamma(x);
            e.claimed = print_element(gx, ctx);
            e.target = expect.str();
            e.pass = (R.kappa(gx) == expect);
            e.detail = e.pass ? "kappa contract holds" : "kappa contract fails";
            out.push_back(std::move(e));
            x = gx;
        }
    }
    // N_{p,i} integrality via (31) for this prime
    for (int i = 2; i <= (p - 1) / 2; ++i) {
        KosniowskiEntry e;
        e.tag = "N_{p,i}";
        e.i = i;
        Int nrhs = Int(ctx.inv_rep(static_cast<int>(p - i + 1)).first) *
                       ctx.inv_rep(static_cast<int>(p - i)).first +
                   ctx.inv_rep(i).first + Int(p - 1) * ctx.inv_rep(i - 1).first;
        e.pass = (nrhs % p == 0);
        if (e.pass) e.n_value = Int(nrhs / p).get_str();
        e.target = nrhs.get_str();
        e.detail = e.pass ? "right side of (31) divisible by p" : "divisibility fails";
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<RelationReport> kosniowski_reports(const FGLContext& ctx) {
    auto entries = kosniowski_catalog(ctx);
    std::vector<RelationReport> out;
    for (const auto& e : entries) {
        RelationReport r;
        if (e.tag == "C_p")
            r.id = "kos.i";
        else if (e.tag == "S_i")
            r.id = "kos.ii";
        else if (e.tag == "CP(1_0,1_i)")
            r.id = "kos.iii";
        else if (e.tag == "CP(1_0,1_1,1_i)")
            r.id = "kos.iv";
        else if (e.tag == "Gamma^m(pt)")
            r.id = "kos.gamma-pt";
        else
            r.id = "eq31";
        if (e.i) r.indices.push_back({"i", e.i});
        if (e.m) r.indices.push_back({"m", e.m});
        r.channel = r.id == "eq31" ? "integrality" : "kappa";
        r.pass = e.pass;
        r.detail = e.detail;
        out.push_back(std::move(r));
    }
    sort_reports(out);
    return out;
}

void sort_reports(std::vector<RelationReport>& reports) {
    std::sort(reports.begin(), reports.end(), [](const RelationReport& a, const RelationReport& b) {
        return std::tie(a.id, a.indices, a.channel) < std::tie(b.id, b.indices, b.channel);
    });
}

std::string report_json(const RelationReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    nlohmann::ordered_json idx = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.indices) idx[k] = v;
    j["indices"] = idx;
    j["channel"] = r.channel;
    j["status"] = r.pass ? "pass" : "fail";
    j["detail"] = r.detail;
    return j.dump();
}

std::string entry_json(const KosniowskiEntry& e) {
    nlohmann::ordered_json j;
    j["tag"] = e.tag;
    j["i"] = e.i;
    j["m"] = e.m;
    j["claimed"] = e.claimed;
    j["target"] = e.target;
    j["N"] = e.n_value;
    j["M"] = e.m_value;
    j["status"] = e.pass ? "pass" : "fail";
    j["detail"] = e.detail;
    return j.dump();
}

}  // namespace cobord
