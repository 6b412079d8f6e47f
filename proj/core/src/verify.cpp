#include "gcdm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <ostream>
#include <utility>

#include "gcdm/catalog.hpp"
#include "gcdm/descriptors.hpp"
#include "gcdm/fock.hpp"
#include "gcdm/random.hpp"
#include "gcdm/simplex.hpp"

namespace gcdm {

namespace {

std::string fmt(const char* pattern, ...) {
    char buffer[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buffer, sizeof buffer, pattern, args);
    va_end(args);
    return std::string(buffer);
}

// splitmix64 step; decorrelates the per-check seeds.
std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double rel(double error, double scale) {
    return std::fabs(error) / std::max(1.0, std::fabs(scale));
}

SimplexPoint random_interior_point(Rng& rng, double margin) {
    for (;;) {
        const double x = rng.uniform(-1.0, 1.0);
        const double w = rng.uniform() * (1.0 - std::fabs(x));
        if (w > margin && w < 1.0 - std::fabs(x) - margin) {
            return SimplexPoint{x, w};
        }
    }
}

const DomainSpec& pick(std::span<const DomainSpec> domains, Rng& rng) {
    return domains[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<int>(domains.size()) - 1))];
}

}  // namespace

std::vector<DomainSpec> synthetic_domains(int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<DomainSpec> domains;
    domains.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) {
        const int n = rng.uniform_int(1, 40);
        const int q = rng.uniform_int(1, std::min(3, n));
        const double e_neutral = rng.uniform(-250.0, -20.0);
        const double ionization = rng.uniform(0.5, 25.0);
        const double affinity = ionization * rng.uniform(-0.9, 0.9);
        char label[32];
        std::snprintf(label, sizeof label, "synthetic-%03d", i);
        domains.emplace_back(label, n, q, e_neutral, e_neutral - affinity,
                             e_neutral + ionization);
    }
    return domains;
}

CheckResult check_normalization(std::uint64_t seed, int random_points) {
    const int n = 1000;
    double max_sum_error = 0.0;
    double min_weight = 1.0;
    double max_weight = 0.0;
    double max_moment_error = 0.0;
    long grid_points = 0;

    const auto visit = [&](double x, double w_zero) {
        const WeightVector w = weights_from_omega_n(x, w_zero);
        max_sum_error = std::max(max_sum_error, std::fabs(w.sum() - 1.0));
        min_weight = std::min({min_weight, w.w_minus, w.w_zero, w.w_plus});
        max_weight = std::max({max_weight, w.w_minus, w.w_zero, w.w_plus});
        max_moment_error =
            std::max(max_moment_error, std::fabs(w.w_plus - w.w_minus - x));
    };

    for (int i = 0; i <= 2 * n; ++i) {
        for (int j = 0; j <= n; ++j) {
            if (std::abs(i - n) + j > n) continue;
            visit(static_cast<double>(i - n) / n, static_cast<double>(j) / n);
            ++grid_points;
        }
    }
    Rng rng(seed);
    for (int k = 0; k < random_points; ++k) {
        const double x = rng.uniform(-1.0, 1.0);
        const double w_zero = rng.uniform() * (1.0 - std::fabs(x));
        visit(x, w_zero);
    }

    const bool passed = max_sum_error <= 1e-12 && min_weight >= 0.0 &&
                        max_weight <= 1.0 && max_moment_error <= 1e-12;
    return CheckResult{
        "weight-normalization", passed,
        fmt("%ld grid + %d random points; max |sum-1| = %.2e; "
            "max |(w+ - w-) - x| = %.2e; weights in [%.2e, %g]",
            grid_points, random_points, max_sum_error, max_moment_error,
            min_weight, max_weight)};
}

CheckResult check_boundary_conditions() {
    bool passed = true;
    const auto expect = [&](bool condition) { passed = passed && condition; };

    const WeightVector top = weights_from_omega_n(0.0, 1.0);
    expect(top.w_minus == 0.0 && top.w_zero == 1.0 && top.w_plus == 0.0);
    const WeightVector right = weights_from_omega_n(1.0, 0.0);
    expect(right.w_minus == 0.0 && right.w_zero == 0.0 && right.w_plus == 1.0);
    const WeightVector left = weights_from_omega_n(-1.0, 0.0);
    expect(left.w_minus == 1.0 && left.w_zero == 0.0 && left.w_plus == 0.0);

    for (int q = 1; q <= 3; ++q) {
        const double qd = static_cast<double>(q);
        const WeightVector anion = weights_from_reference(
            ChargeFraction(qd, q), ReferenceFraction(qd, q));
        expect(anion.w_plus == 1.0 && anion.w_zero == 0.0 &&
               anion.w_minus == 0.0);
        const WeightVector cation = weights_from_reference(
            ChargeFraction(-qd, q), ReferenceFraction(-qd, q));
        expect(cation.w_minus == 1.0 && cation.w_zero == 0.0 &&
               cation.w_plus == 0.0);
        const WeightVector neutral = weights_from_reference(
            ChargeFraction(0.0, q), ReferenceFraction(0.0, q));
        expect(neutral.w_zero == 1.0 && neutral.w_minus == 0.0 &&
               neutral.w_plus == 0.0);
        expect(reference_fraction(1.0, Side::Acceptor, q).nu0 == 0.0);
        expect(reference_fraction(1.0, Side::Donor, q).nu0 == 0.0);
        expect(reference_fraction(0.0, Side::Acceptor, q).nu0 == qd);
        expect(reference_fraction(0.0, Side::Donor, q).nu0 == -qd);
    }

    const DomainSpec probe("probe", 7, 2, -100.0, -98.0, -88.0);
    expect(mean_particle_number(probe, top) == 7.0);
    expect(mean_particle_number(probe, right) == 9.0);
    expect(mean_particle_number(probe, left) == 5.0);

    return CheckResult{"boundary-conditions", passed,
                       passed ? "vertex weights and sector means exact"
                              : "a vertex identity failed"};
}

CheckResult check_reference_agreement(std::uint64_t seed, int pairs_per_side) {
    Rng rng(seed);
    double max_deviation = 0.0;
    bool two_state_ok = true;
    for (int side = 0; side < 2; ++side) {
        const double sign = side == 0 ? 1.0 : -1.0;
        for (int k = 0; k < pairs_per_side; ++k) {
            const int q = 1 + k % 3;
            const double qd = static_cast<double>(q);
            const double a = qd * (0.05 + 0.95 * rng.uniform());
            const double nu = sign * a * rng.uniform();
            const WeightVector by_line = weights_from_reference(
                ChargeFraction(nu, q), ReferenceFraction(sign * a, q));
            const WeightVector by_column =
                weights_from_omega_n(nu / qd, 1.0 - a / qd);
            max_deviation = std::max(
                {max_deviation, std::fabs(by_line.w_minus - by_column.w_minus),
                 std::fabs(by_line.w_zero - by_column.w_zero),
                 std::fabs(by_line.w_plus - by_column.w_plus)});

            const WeightVector ground = weights_from_reference(
                ChargeFraction(sign * a, q), ReferenceFraction(sign * a, q));
            if (sign > 0.0) {
                two_state_ok = two_state_ok && ground.w_minus == 0.0 &&
                               ground.w_plus > 0.0;
            } else {
                two_state_ok = two_state_ok && ground.w_plus == 0.0 &&
                               ground.w_minus > 0.0;
            }
        }
    }
    const bool passed = max_deviation <= 1e-12 && two_state_ok;
    return CheckResult{"reference-route-agreement", passed,
                       fmt("%d pairs per side; max route deviation = %.2e; "
                           "ground lines keep one ionic weight at zero: %s",
                           pairs_per_side, max_deviation,
                           two_state_ok ? "yes" : "no")};
}

std::pair<CheckResult, CheckResult> check_ensemble_oracle(
    std::span<const DomainSpec> domains, std::uint64_t seed, int cases) {
    Rng rng(seed);
    double max_number_error = 0.0;
    double max_energy_error = 0.0;
    double max_padding_gap = 0.0;
    double worst_diag = 0.0;
    for (int k = 0; k < cases; ++k) {
        const DomainSpec& d = pick(domains, rng);
        const SimplexPoint p = random_interior_point(rng, 1e-6);
        const WeightVector w = weights_from_omega_n(p.x, p.w_zero);
        const std::vector<std::pair<int, double>> sector_weights = {
            {d.n_electrons - d.q, w.w_minus},
            {d.n_electrons, w.w_zero},
            {d.n_electrons + d.q, w.w_plus}};
        const int dimension = k % 2 == 0 ? 1 : 5;
        const FockSpaceSpec space = FockSpaceSpec::for_domain(d, dimension);
        const Operators ops = build_operators(space);
        const EnsembleState state = build_ensemble(space, sector_weights);

        const double traced_n = trace_observable(state, ops.number_op);
        const double mean_n = mean_particle_number(d, w);
        const double pinned_n =
            static_cast<double>(d.n_electrons) + p.x * d.q;
        max_number_error = std::max({max_number_error,
                                     std::fabs(traced_n - mean_n),
                                     std::fabs(traced_n - pinned_n)});

        const double traced_e = trace_observable(state, ops.hamiltonian);
        const double closed_e = energy(d, w);
        max_energy_error =
            std::max(max_energy_error, rel(traced_e - closed_e, closed_e));

        if (k % 100 == 0) {
            const FockSpaceSpec other = FockSpaceSpec::for_domain(d, 6);
            const EnsembleState wide = build_ensemble(other, sector_weights);
            const Operators wide_ops = build_operators(other);
            max_padding_gap = std::max(
                {max_padding_gap,
                 std::fabs(trace_observable(wide, wide_ops.hamiltonian) -
                           traced_e),
                 std::fabs(trace_observable(wide, wide_ops.number_op) -
                           traced_n)});
            const StateDiagnostics diag = diagnose(state);
            worst_diag = std::max({worst_diag, diag.hermiticity_error,
                                   diag.trace_error, diag.max_off_block,
                                   std::max(0.0, -diag.min_eigenvalue)});
        }
    }
    const bool number_ok = max_number_error <= 1e-9;
    const bool energy_ok = max_energy_error <= 1e-9 &&
                           max_padding_gap <= 1e-12 && worst_diag <= 1e-12;
    return {CheckResult{"particle-number-oracle", number_ok,
                        fmt("%d cases; max |tr(N D) - (N + nu)| = %.2e",
                            cases, max_number_error)},
            CheckResult{"energy-oracle", energy_ok,
                        fmt("%d cases; max rel |tr(H D) - E| = %.2e; "
                            "padding gap = %.2e; worst diagnostic = %.2e",
                            cases, max_energy_error, max_padding_gap,
                            worst_diag)}};
}

CheckResult check_purity(std::span<const DomainSpec> domains,
                         std::uint64_t seed, int cases) {
    Rng rng(seed);
    double max_mixed_error = 0.0;
    bool pure_ok = true;
    bool mixed_below_one = true;
    for (int k = 0; k < cases; ++k) {
        const DomainSpec& d = pick(domains, rng);
        const SimplexPoint p = random_interior_point(rng, 1e-6);
        const WeightVector w = weights_from_omega_n(p.x, p.w_zero);
        const int dimension = k % 2 == 0 ? 1 : 5;
        const FockSpaceSpec space = FockSpaceSpec::for_domain(d, dimension);
        const EnsembleState state =
            build_ensemble(space, {{d.n_electrons - d.q, w.w_minus},
                                   {d.n_electrons, w.w_zero},
                                   {d.n_electrons + d.q, w.w_plus}});
        const double traced = purity(state);
        const double closed = w.w_minus * w.w_minus + w.w_zero * w.w_zero +
                              w.w_plus * w.w_plus;
        max_mixed_error = std::max(max_mixed_error, std::fabs(traced - closed));
        mixed_below_one = mixed_below_one && traced < 1.0;
    }
    for (const DomainSpec& d : domains) {
        const FockSpaceSpec space = FockSpaceSpec::for_domain(d, 2);
        for (const int count :
             {d.n_electrons - d.q, d.n_electrons, d.n_electrons + d.q}) {
            const EnsembleState pure = build_ensemble(space, {{count, 1.0}});
            pure_ok = pure_ok && purity(pure) == 1.0;
        }
        const EnsembleState even_pair =
            build_ensemble(space, {{d.n_electrons - d.q, 0.5},
                                   {d.n_electrons + d.q, 0.5}});
        pure_ok = pure_ok && std::fabs(purity(even_pair) - 0.5) <= 1e-12;
    }
    const bool passed = max_mixed_error <= 1e-12 && pure_ok && mixed_below_one;
    return CheckResult{
        "purity", passed,
        fmt("%d mixed cases; max |tr(D^2) - sum w^2| = %.2e; pure states at "
            "1 and the even pair at 1/2: %s",
            cases, max_mixed_error, pure_ok ? "yes" : "no")};
}

CheckResult check_promotion(std::span<const DomainSpec> domains,
                            std::uint64_t seed, int cases) {
    std::vector<const DomainSpec*> eligible;
    for (const DomainSpec& d : domains) {
        if (descriptor_set(d).mu0 < 0.0) eligible.push_back(&d);
    }
    if (eligible.empty()) {
        return CheckResult{"promotion-energy", false,
                           "no domain with mu0 < 0 available"};
    }
    Rng rng(seed);
    double max_form_gap = 0.0;
    double min_value = 0.0;
    bool exact_zero = true;
    for (int k = 0; k < cases; ++k) {
        const DomainSpec& d = *eligible[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(eligible.size()) - 1))];
        const DescriptorSet ds = descriptor_set(d);
        const double qd = static_cast<double>(d.q);
        const double sign = rng.coin() ? 1.0 : -1.0;
        const double a = qd * (0.05 + 0.945 * rng.uniform());
        const double nu = sign * a * (0.999 * rng.uniform());
        const ReferenceFraction ref(sign * a, d.q);
        const double dh = delta_h(d, ChargeFraction(nu, d.q), ref);
        const double via_gap =
            -sign * ((nu - ref.nu0) / (2.0 * qd)) * (ds.a_q + ds.i_q);
        const double via_mu = sign * ((nu - ref.nu0) / qd) * ds.mu0;
        max_form_gap = std::max({max_form_gap, std::fabs(dh - via_gap),
                                 std::fabs(dh - via_mu)});
        min_value = std::min(min_value, dh);
        if (k % 100 == 0) {
            exact_zero = exact_zero &&
                         delta_h(d, ChargeFraction(ref.nu0, d.q), ref) == 0.0;
        }
    }
    const bool passed = max_form_gap <= 1e-9 && min_value >= 0.0 && exact_zero;
    return CheckResult{
        "promotion-energy", passed,
        fmt("%d cases over %zu domains; max closed-form gap = %.2e; "
            "min value = %.2e; zero on the ground line: %s",
            cases, eligible.size(), max_form_gap, min_value,
            exact_zero ? "exact" : "violated")};
}

CheckResult check_relaxation(std::span<const DomainSpec> domains,
                             std::uint64_t seed, int cases) {
    std::vector<const DomainSpec*> eligible;
    for (const DomainSpec& d : domains) {
        if (descriptor_set(d).eta0 > 0.0) eligible.push_back(&d);
    }
    if (eligible.empty()) {
        return CheckResult{"relaxation-energy", false,
                           "no domain with eta0 > 0 available"};
    }
    Rng rng(seed);
    double max_form_gap = 0.0;
    double max_value = 0.0;
    bool exact_zero = true;
    bool midpoint_ok = true;
    for (int k = 0; k < cases; ++k) {
        const DomainSpec& d = *eligible[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(eligible.size()) - 1))];
        const DescriptorSet ds = descriptor_set(d);
        const double qd = static_cast<double>(d.q);
        const double sign = rng.coin() ? 1.0 : -1.0;
        const double a = qd * (0.1 + 0.895 * rng.uniform());
        const double nu = sign * a * (0.98 * rng.uniform());
        const double a_prime =
            std::fabs(nu) + (a - std::fabs(nu)) * (0.99 * rng.uniform());
        const double du =
            delta_u(d, ChargeFraction(nu, d.q), ReferenceFraction(sign * a, d.q),
                    ReferenceFraction(sign * a_prime, d.q));
        const double closed = ((a_prime - a) / qd) * ds.eta0;
        max_form_gap = std::max(max_form_gap, std::fabs(du - closed));
        max_value = std::max(max_value, du);
        if (k % 100 == 0) {
            const ReferenceFraction same(sign * a, d.q);
            exact_zero = exact_zero &&
                         delta_u(d, ChargeFraction(nu, d.q), same, same) == 0.0;
            midpoint_ok = midpoint_ok &&
                          std::fabs((ds.e_bar - d.e_neutral) - ds.eta0) <=
                              1e-12 * std::max(1.0, std::fabs(ds.eta0));
        }
    }
    const bool passed =
        max_form_gap <= 1e-9 && max_value <= 0.0 && exact_zero && midpoint_ok;
    return CheckResult{
        "relaxation-energy", passed,
        fmt("%d cases over %zu domains; max closed-form gap = %.2e; "
            "max value = %.2e; zero for an unchanged line: %s",
            cases, eligible.size(), max_form_gap, max_value,
            exact_zero ? "exact" : "violated")};
}

CheckResult check_trend(std::span<const DomainSpec> domains,
                        std::uint64_t seed, int lines, int samples) {
    std::vector<const DomainSpec*> decreasing;
    std::vector<const DomainSpec*> symmetric;
    for (const DomainSpec& d : domains) {
        const double mu0 = descriptor_set(d).mu0;
        if (mu0 < 0.0) decreasing.push_back(&d);
        else if (mu0 == 0.0) symmetric.push_back(&d);
    }
    if (decreasing.empty()) {
        return CheckResult{"energy-trend", false,
                           "no domain with mu0 < 0 available"};
    }
    Rng rng(seed);
    bool monotone = true;
    bool ends_match = true;
    double max_flat_spread = 0.0;
    for (int k = 0; k < lines; ++k) {
        const DomainSpec& d = *decreasing[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(decreasing.size()) - 1))];
        const double w_zero = rng.uniform(0.05, 0.95);
        const std::vector<double> energies = energy_trend(d, w_zero, samples);
        for (std::size_t i = 1; i < energies.size(); ++i) {
            monotone = monotone && energies[i] < energies[i - 1];
        }
        const double limit = static_cast<double>(d.q) * (1.0 - w_zero);
        ends_match = ends_match &&
                     energies.front() ==
                         edge_energy(d, ReferenceFraction(-limit, d.q)) &&
                     energies.back() ==
                         edge_energy(d, ReferenceFraction(limit, d.q));
    }
    for (const DomainSpec* d : symmetric) {
        const std::vector<double> energies = energy_trend(*d, 0.4, samples);
        const auto [lo, hi] =
            std::minmax_element(energies.begin(), energies.end());
        max_flat_spread = std::max(max_flat_spread, *hi - *lo);
    }
    const bool passed = monotone && ends_match && max_flat_spread <= 1e-12;
    return CheckResult{
        "energy-trend", passed,
        fmt("%d lines x %d samples; strictly decreasing: %s; ends equal the "
            "edge energies: %s; %zu symmetric domains flat within %.2e",
            lines, samples, monotone ? "yes" : "no",
            ends_match ? "yes" : "no", symmetric.size(), max_flat_spread)};
}

CheckResult check_slopes(std::span<const DomainSpec> domains,
                         std::uint64_t seed, int points) {
    Rng rng(seed);
    double max_gap = 0.0;
    for (int k = 0; k < points; ++k) {
        const DomainSpec& d = pick(domains, rng);
        const DescriptorSet ds = descriptor_set(d);
        const double qd = static_cast<double>(d.q);
        const double sign = rng.coin() ? 1.0 : -1.0;
        const double w_zero = rng.uniform(0.1, 0.8);
        const double x =
            sign * (0.001 + rng.uniform() * ((1.0 - w_zero) - 0.011));
        const SlopePair slopes = energy_slopes(d, SimplexPoint{x, w_zero});
        const double want_nu = ds.mu0 / qd;
        const double want_nu0 = sign * ds.eta0 / qd;
        max_gap = std::max({max_gap,
                            std::fabs(slopes.d_e_d_nu - want_nu) /
                                std::max(1.0, std::fabs(want_nu)),
                            std::fabs(slopes.d_e_d_nu0 - want_nu0) /
                                std::max(1.0, std::fabs(want_nu0))});
    }
    const bool passed = max_gap <= 1e-6;
    return CheckResult{"energy-slopes", passed,
                       fmt("%d interior points; max slope deviation = %.2e "
                           "against mu0/q and +-eta0/q",
                           points, max_gap)};
}

namespace {

Region expected_region(int u, int j, int n) {
    const int au = std::abs(u);
    if (au + j > n) return Region::Outside;
    if (u == 0 && j == n) return Region::VertexNeutral;
    if (u == n && j == 0) return Region::VertexAnion;
    if (u == -n && j == 0) return Region::VertexCation;
    if (u == 0 && j == 0) return Region::Origin;
    if (u > 0 && au + j == n) return Region::EdgeAcceptor;
    if (u < 0 && au + j == n) return Region::EdgeDonor;
    if (u == 0) return Region::NeutralAxis;
    return u > 0 ? Region::InteriorAcceptor : Region::InteriorDonor;
}

}  // namespace

CheckResult check_classification_grid(int grid) {
    if (grid < 2 || grid % 2 != 0) {
        throw std::invalid_argument(
            "classification grid must be even and >= 2");
    }
    const int n = grid;
    const std::size_t columns = static_cast<std::size_t>(n) + 1;
    std::vector<unsigned char> first_pass(columns * columns);
    bool exact_match = true;
    bool mirror_ok = true;
    long count_plus = 0;
    long count_minus = 0;

    for (int i = 0; i <= n; ++i) {
        const int u = 2 * i - n;
        const double x = static_cast<double>(u) / n;
        for (int j = 0; j <= n; ++j) {
            const double w = static_cast<double>(j) / n;
            const Region got = classify(SimplexPoint{x, w});
            first_pass[static_cast<std::size_t>(i) * columns +
                       static_cast<std::size_t>(j)] =
                static_cast<unsigned char>(got);
            exact_match = exact_match && got == expected_region(u, j, n);
            const Region mirrored = classify(SimplexPoint{-x, w});
            mirror_ok = mirror_ok && mirrored == expected_region(-u, j, n);
            if (got == Region::InteriorAcceptor) ++count_plus;
            if (got == Region::InteriorDonor) ++count_minus;
        }
    }

    bool deterministic = true;
    for (int i = 0; i <= n; ++i) {
        const double x = static_cast<double>(2 * i - n) / n;
        for (int j = 0; j <= n; ++j) {
            const Region again =
                classify(SimplexPoint{x, static_cast<double>(j) / n});
            deterministic =
                deterministic &&
                static_cast<unsigned char>(again) ==
                    first_pass[static_cast<std::size_t>(i) * columns +
                               static_cast<std::size_t>(j)];
        }
    }

    const double total = static_cast<double>(columns) * columns;
    const double fraction_plus = count_plus / total;
    const double fraction_minus = count_minus / total;
    const bool fractions_ok = std::fabs(fraction_plus - 0.25) <= 0.0025 &&
                              std::fabs(fraction_minus - 0.25) <= 0.0025 &&
                              count_plus == count_minus;
    const bool passed =
        exact_match && mirror_ok && deterministic && fractions_ok;
    return CheckResult{
        "classification-grid", passed,
        fmt("grid %dx%d; labels match exact geometry: %s; mirror symmetric: "
            "%s; deterministic: %s; interior fractions %.6f / %.6f",
            n + 1, n + 1, exact_match ? "yes" : "no",
            mirror_ok ? "yes" : "no", deterministic ? "yes" : "no",
            fraction_plus, fraction_minus)};
}

namespace {

SpeciesRecord random_record(Rng& rng, int catalog_index, int record_index) {
    SpeciesRecord record;
    record.label = "species-" + std::to_string(catalog_index) + "-" +
                   std::to_string(record_index);
    switch (rng.uniform_int(0, 6)) {
        case 0: record.label += ",comma"; break;
        case 1: record.label += " \"quoted\""; break;
        case 2: record.label += "\nsecond line"; break;
        case 3: record.label += " \xCE\xA9"; break;
        default: break;
    }
    record.n_electrons = rng.uniform_int(1, 60);
    record.q = rng.uniform_int(1, 3);
    const auto energy_value = [&rng] {
        double value = rng.uniform(-1000.0, 1000.0);
        switch (rng.uniform_int(0, 4)) {
            case 0: value = std::round(value); break;
            case 1: value *= 1e-7; break;
            case 2: value *= 1e6; break;
            default: break;
        }
        return value;
    };
    record.e_neutral = energy_value();
    if (rng.coin()) {
        record.mode = EnergyMode::Absolute;
        record.e_anion = energy_value();
        record.e_cation = energy_value();
    } else {
        record.mode = EnergyMode::Descriptor;
        record.i_q = energy_value();
        record.a_q = energy_value();
    }
    static const char* const kUnits[] = {"eV", "Ha", "kJ/mol", "",
                                         "e,V\"x\""};
    record.units = kUnits[rng.uniform_int(0, 4)];
    return record;
}

bool equal_records(const SpeciesRecord& a, const SpeciesRecord& b) {
    return a.label == b.label && a.n_electrons == b.n_electrons &&
           a.q == b.q && a.mode == b.mode && a.e_neutral == b.e_neutral &&
           a.e_anion == b.e_anion && a.e_cation == b.e_cation &&
           a.i_q == b.i_q && a.a_q == b.a_q && a.units == b.units;
}

bool equal_record_lists(const std::vector<SpeciesRecord>& a,
                        const std::vector<SpeciesRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!equal_records(a[i], b[i])) return false;
    }
    return true;
}

}  // namespace

CheckResult check_round_trip(std::uint64_t seed, int catalogs) {
    Rng rng(seed);
    bool identity_ok = true;
    bool stable_ok = true;
    double max_mode_gap = 0.0;
    for (int c = 0; c < catalogs; ++c) {
        std::vector<SpeciesRecord> records;
        const int count = rng.uniform_int(1, 8);
        records.reserve(static_cast<std::size_t>(count));
        for (int r = 0; r < count; ++r) {
            records.push_back(random_record(rng, c, r));
        }
        for (const CatalogFormat format :
             {CatalogFormat::Json, CatalogFormat::Csv}) {
            const std::string text = write_catalog(records, format);
            const std::vector<SpeciesRecord> back = parse_catalog(text, format);
            identity_ok = identity_ok && equal_record_lists(records, back);
            stable_ok = stable_ok && write_catalog(back, format) == text;
        }

        const double e_neutral = rng.uniform(-250.0, -20.0);
        const double ionization = rng.uniform(0.5, 25.0);
        const double affinity = ionization * rng.uniform(-0.9, 0.9);
        SpeciesRecord absolute;
        absolute.label = "pair";
        absolute.n_electrons = 10;
        absolute.q = 1;
        absolute.mode = EnergyMode::Absolute;
        absolute.e_neutral = e_neutral;
        absolute.e_anion = e_neutral - affinity;
        absolute.e_cation = e_neutral + ionization;
        SpeciesRecord descriptor = absolute;
        descriptor.mode = EnergyMode::Descriptor;
        descriptor.e_anion.reset();
        descriptor.e_cation.reset();
        descriptor.i_q = ionization;
        descriptor.a_q = affinity;
        const DomainSpec via_absolute = to_domain(absolute);
        const DomainSpec via_descriptor = to_domain(descriptor);
        max_mode_gap = std::max(
            {max_mode_gap,
             std::fabs(via_absolute.e_anion - via_descriptor.e_anion),
             std::fabs(via_absolute.e_cation - via_descriptor.e_cation),
             std::fabs(via_absolute.e_neutral - via_descriptor.e_neutral)});
    }
    const bool passed = identity_ok && stable_ok && max_mode_gap <= 1e-12;
    return CheckResult{
        "catalog-round-trip", passed,
        fmt("%d catalogs in both formats; parse(write(x)) == x: %s; second "
            "write byte-stable: %s; mode equivalence gap = %.2e",
            catalogs, identity_ok ? "yes" : "no", stable_ok ? "yes" : "no",
            max_mode_gap)};
}

std::vector<CheckResult> run_verification(std::span<const DomainSpec> domains,
                                          const VerifyOptions& options) {
    std::vector<DomainSpec> pool(domains.begin(), domains.end());
    const std::vector<DomainSpec> synthetic =
        synthetic_domains(options.synthetic_count, mix(options.seed, 0));
    pool.insert(pool.end(), synthetic.begin(), synthetic.end());
    if (pool.empty()) {
        throw std::invalid_argument("verification needs at least one domain");
    }
    std::vector<CheckResult> results;
    results.push_back(
        check_normalization(mix(options.seed, 1), options.simplex_points));
    results.push_back(check_boundary_conditions());
    results.push_back(check_reference_agreement(
        mix(options.seed, 2), std::max(100, options.simplex_points / 100)));
    auto oracle =
        check_ensemble_oracle(pool, mix(options.seed, 3), options.oracle_cases);
    results.push_back(std::move(oracle.first));
    results.push_back(std::move(oracle.second));
    results.push_back(
        check_purity(pool, mix(options.seed, 4), options.purity_cases));
    results.push_back(
        check_promotion(pool, mix(options.seed, 5), options.promotion_cases));
    results.push_back(
        check_relaxation(pool, mix(options.seed, 6), options.relaxation_cases));
    results.push_back(check_trend(pool, mix(options.seed, 7),
                                  options.trend_lines, options.trend_samples));
    results.push_back(
        check_slopes(pool, mix(options.seed, 8), options.slope_points));
    results.push_back(check_classification_grid(options.classification_grid));
    results.push_back(
        check_round_trip(mix(options.seed, 9), options.round_trips));
    return results;
}

bool all_passed(std::span<const CheckResult> results) {
    for (const CheckResult& result : results) {
        if (!result.passed) return false;
    }
    return true;
}

void print_report(std::ostream& out, const VerifyOptions& options,
                  std::size_t catalog_count,
                  std::span<const CheckResult> results) {
    out << "three-state ensemble verification\n";
    out << "seed: " << options.seed << "\n";
    out << "catalog domains: " << catalog_count << "\n";
    out << "synthetic domains: " << options.synthetic_count << "\n";
    std::size_t passed = 0;
    for (const CheckResult& result : results) {
        if (result.passed) ++passed;
        out << (result.passed ? "[PASS] " : "[FAIL] ") << result.name;
        for (std::size_t pad = result.name.size(); pad < 28; ++pad) {
            out << ' ';
        }
        out << ' ' << result.detail << "\n";
    }
    out << "result: " << (passed == results.size() ? "PASS" : "FAIL") << " ("
        << passed << "/" << results.size() << ")\n";
}

}  // namespace gcdm
