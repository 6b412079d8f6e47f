#include <string>
#include <utility>
#include <vector>

#include <benchmark/benchmark.h>

#include "gcdm/catalog.hpp"
#include "gcdm/descriptors.hpp"
#include "gcdm/fock.hpp"

using namespace gcdm;

namespace {

const DomainSpec& bench_domain() {
    static const DomainSpec domain("bench", 6, 1, -100.0, -99.0, -90.0);
    return domain;
}

const std::vector<std::pair<int, double>>& bench_weights() {
    static const std::vector<std::pair<int, double>> weights = {
        {5, 0.05}, {6, 0.4}, {7, 0.55}};
    return weights;
}

void BM_Weights(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(weights_from_omega_n(0.37, 0.29));
    }
}
BENCHMARK(BM_Weights);

void BM_Classify(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(SimplexPoint{0.37, 0.29}));
    }
}
BENCHMARK(BM_Classify);

void BM_EnergyPoint(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            energy_point(bench_domain(), SimplexPoint{0.37, 0.29}));
    }
}
BENCHMARK(BM_EnergyPoint);

void BM_BuildEnsemble(benchmark::State& state) {
    const FockSpaceSpec space = FockSpaceSpec::for_domain(
        bench_domain(), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_ensemble(space, bench_weights()));
    }
}
BENCHMARK(BM_BuildEnsemble)->Arg(1)->Arg(8);

void BM_TraceObservable(benchmark::State& state) {
    const FockSpaceSpec space = FockSpaceSpec::for_domain(
        bench_domain(), static_cast<int>(state.range(0)));
    const Operators ops = build_operators(space);
    const EnsembleState ensemble = build_ensemble(space, bench_weights());
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace_observable(ensemble, ops.hamiltonian));
    }
}
BENCHMARK(BM_TraceObservable)->Arg(1)->Arg(8);

void BM_Purity(benchmark::State& state) {
    const FockSpaceSpec space = FockSpaceSpec::for_domain(
        bench_domain(), static_cast<int>(state.range(0)));
    const EnsembleState ensemble = build_ensemble(space, bench_weights());
    for (auto _ : state) {
        benchmark::DoNotOptimize(purity(ensemble));
    }
}
BENCHMARK(BM_Purity)->Arg(1)->Arg(8);

void BM_ParseCatalogCsv(benchmark::State& state) {
    std::vector<SpeciesRecord> records;
    for (int i = 0; i < 32; ++i) {
        SpeciesRecord record;
        record.label = "species-" + std::to_string(i);
        record.n_electrons = 6 + i;
        record.q = 1 + i % 3;
        record.e_neutral = -100.0 - i;
        record.e_anion = -99.0 - i;
        record.e_cation = -90.0 - i;
        records.push_back(std::move(record));
    }
    const std::string text = write_catalog(records, CatalogFormat::Csv);
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_catalog(text, CatalogFormat::Csv));
    }
}
BENCHMARK(BM_ParseCatalogCsv);

}  // namespace

BENCHMARK_MAIN();
