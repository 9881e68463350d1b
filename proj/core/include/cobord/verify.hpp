#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cobord/fgl.hpp"
#include "cobord/omega.hpp"
#include "cobord/pullback.hpp"

namespace cobord {

// One verified relation instance. Reproducible from (p, D, id, indices) and,
// for randomized checks, the seed recorded in `detail`.
struct RelationReport {
    std::string id;                                      // e.g. "eq13", "kos.iv"
    std::vector<std::pair<std::string, long>> indices;   // named index tuple
    std::string channel;  // "normal-form" | "kappa" | "rho-mod-pu" | "integrality"
    bool pass = true;
    std::string detail;   // certificate summary or counterexample location
};

// One row of the Kosniowski generator catalog (Lemma 5.4 entries plus the
// Gamma iterates of a point), with the arithmetic invariants (31)-(32).
struct KosniowskiEntry {
    std::string tag;      // "C_p", "S_i", "CP(1_0,1_i)", "CP(1_0,1_1,1_i)", "Gamma^m(pt)"
    long i = 0;           // representation index when applicable
    long m = 0;           // Gamma-iterate count when applicable
    std::string claimed;  // PresentationElement in canonical text
    std::string target;   // geometric-fixed-point image
    std::string n_value;  // N_{p,i} (empty when not applicable)
    std::string m_value;  // M_{p,i} as an a-polynomial witness (empty likewise)
    bool pass = true;
    std::string detail;
};

// Parallelism cap: COBORDISM_FORGE_THREADS when set, hardware otherwise.
int verify_thread_count();

// All basis monomials of degree <= max_degree, sorted.
std::vector<BasisMonomial> basis_monomials(const OmegaRing& ring, long max_degree);

// Seeded random homogeneous element of the given (even) degree with
// small-height integer coefficients on random weight monomials.
PresentationElement random_homogeneous(const OmegaRing& ring, long degree, std::mt19937_64& rng);

// Theorem 3.2 relation families (13)-(19) plus Lemma 3.8, on the kappa and
// rho-mod-[p]u channels, over all index tuples within degree 2D.
std::vector<RelationReport> verify_mu_presentation(const FGLContext& ctx);

// Theorem 4.1 / Remark 4.2 relations (20)-(26) on the normal-form and kappa
// channels.
std::vector<RelationReport> verify_omega_presentation(const FGLContext& ctx);

// Corollary 4.4: leading-monomial distinctness, random linear combinations,
// q_1 torsion-freeness via res.
std::vector<RelationReport> verify_basis(const FGLContext& ctx, unsigned long long seed);

// Prop. 5.5 contract on every basis element of degree <= 2D-2, plus
// additivity spot checks.
std::vector<RelationReport> verify_gamma(const FGLContext& ctx, unsigned long long seed);

// Lemma 5.4 catalog with Eq. (31)-(32) certificates.
std::vector<KosniowskiEntry> kosniowski_catalog(const FGLContext& ctx);
std::vector<RelationReport> kosniowski_reports(const FGLContext& ctx);

// Canonical order: (id, indices, channel); JSON-lines serialization.
void sort_reports(std::vector<RelationReport>& reports);
std::string report_json(const RelationReport& r);
std::string entry_json(const KosniowskiEntry& e);

}  // namespace cobord
