#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcdm/domain.hpp"

namespace gcdm {

/* Invariant suite for the whole model.

   Every check is deterministic in its seed and returns a pass flag plus a
   short diagnostic line, so a report written from the same seed and domain
   pool is byte-identical run to run. The ensemble checks compare the
   closed-form weight algebra against explicit density matrices and must
   stay independent of how wide the sector blocks are padded.
*/

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

// Scale knobs for run_verification; the defaults are the shipped contract.
struct VerifyOptions {
    std::uint64_t seed = 0;
    int synthetic_count = 0;   // domains generated next to the catalog
    int simplex_points = 100000;
    int oracle_cases = 10000;
    int promotion_cases = 10000;
    int relaxation_cases = 10000;
    int trend_lines = 100;
    int trend_samples = 21;
    int slope_points = 1000;
    int purity_cases = 2000;
    int round_trips = 1000;
    int classification_grid = 400;
};

// Reproducible pool of physically valid domains: ionization positive,
// |affinity| below ionization, so mu0 < 0 and eta0 > 0 throughout.
std::vector<DomainSpec> synthetic_domains(int count, std::uint64_t seed);

// Weight normalization and bounds on a 1e-3 grid plus random interior
// points; also pins w_plus - w_minus to the abscissa.
CheckResult check_normalization(std::uint64_t seed, int random_points);

// Exact weights at the three vertices from both construction routes, and
// exact sector means there.
CheckResult check_boundary_conditions();

// Horizontal-line and vertical-line constructions agree; at nu = nu0
// exactly one ionic weight vanishes.
CheckResult check_reference_agreement(std::uint64_t seed, int pairs_per_side);

// Closed-form mean particle number and energy against density-matrix
// traces, with sector padding alternating between 1 and 5 and padded
// results compared against unpadded ones.
std::pair<CheckResult, CheckResult> check_ensemble_oracle(
    std::span<const DomainSpec> domains, std::uint64_t seed, int cases);

// tr(D^2) against the weight sum of squares; 1 at vertices, 1/2 for the
// even two-sector mixture.
CheckResult check_purity(std::span<const DomainSpec> domains,
                         std::uint64_t seed, int cases);

// delta_h nonnegative for mu0 < 0, equal to both closed forms, and zero
// exactly on the ground lines.
CheckResult check_promotion(std::span<const DomainSpec> domains,
                            std::uint64_t seed, int cases);

// delta_u nonpositive for eta0 > 0, equal to the closed form, zero exactly
// for an unchanged reference, and e_bar above e_neutral by eta0.
CheckResult check_relaxation(std::span<const DomainSpec> domains,
                             std::uint64_t seed, int cases);

// Line scans strictly decreasing when mu0 < 0, constant for symmetric
// domains, with ends matching the edge energies bitwise.
CheckResult check_trend(std::span<const DomainSpec> domains,
                        std::uint64_t seed, int lines, int samples);

// Finite-difference slopes against mu0/q and +-eta0/q.
CheckResult check_slopes(std::span<const DomainSpec> domains,
                         std::uint64_t seed, int points);

// classify() against exact integer geometry on an (n+1)^2 grid, plus
// determinism, mirror symmetry, and the 25% interior area fractions.
CheckResult check_classification_grid(int grid);

// Catalog write/parse identity in both formats, second-generation byte
// stability, and absolute/descriptor mode equivalence.
CheckResult check_round_trip(std::uint64_t seed, int catalogs);

// Runs every check over the given domains plus synthetic ones.
std::vector<CheckResult> run_verification(std::span<const DomainSpec> domains,
                                          const VerifyOptions& options);

bool all_passed(std::span<const CheckResult> results);

// Plain-text report, one line per check; byte-stable for a fixed seed.
void print_report(std::ostream& out, const VerifyOptions& options,
                  std::size_t catalog_count,
                  std::span<const CheckResult> results);

}  // namespace gcdm
