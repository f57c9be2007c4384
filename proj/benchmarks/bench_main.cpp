#include <benchmark/benchmark.h>

#include <random>

#include "taucore/canonical.hpp"
#include "taucore/catalog.hpp"
#include "taucore/constructions.hpp"
#include "taucore/graph.hpp"
#include "taucore/homology.hpp"
#include "taucore/linalg.hpp"
#include "taucore/tau.hpp"

using namespace tauv;

namespace {

GF2Matrix random_gf2(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GF2Matrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (rng() & 1) m.set(r, c);
    return m;
}

}  // namespace

static void BM_GF2Rank(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto base = random_gf2(n, 42);
    for (auto _ : state) {
        GF2Matrix m = base;
        benchmark::DoNotOptimize(m.rank());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_GF2Rank)->Range(64, 1024)->Complexity();

static void BM_FpRank(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    FpMatrix base(n, n, 1000003);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) base.set(r, c, rng() % 1000003);
    for (auto _ : state) {
        FpMatrix m = base;
        benchmark::DoNotOptimize(m.rank());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_FpRank)->Range(32, 256)->Complexity();

static void BM_BettiNumbers(benchmark::State& state) {
    auto c = cycle_join_sphere(static_cast<int>(state.range(0)), 3);
    FieldSpec f = FieldSpec::fp(2);
    for (auto _ : state) benchmark::DoNotOptimize(reduced_betti(c, f));
}
BENCHMARK(BM_BettiNumbers)->DenseRange(4, 8, 2);

// The dominant cost in practice: one tau-vector is 2^n induced homology runs.
static void BM_TauVectorStacked(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto c = stacked_sphere(3, n, 11);
    FieldSpec f = FieldSpec::fp(2);
    for (auto _ : state) benchmark::DoNotOptimize(tau_vector(c, f));
}
BENCHMARK(BM_TauVectorStacked)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_TauVectorWorkers(benchmark::State& state) {
    auto c = bl_reference_sphere(12, 10);
    FieldSpec f = FieldSpec::fp(2);
    TauOptions opt{static_cast<int>(state.range(0)), 22};
    for (auto _ : state) benchmark::DoNotOptimize(tau_vector(c, f, opt));
}
BENCHMARK(BM_TauVectorWorkers)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_HochsterTable(benchmark::State& state) {
    auto c = stacked_sphere(3, static_cast<int>(state.range(0)), 5);
    FieldSpec f = FieldSpec::fp(2);
    for (auto _ : state) benchmark::DoNotOptimize(hochster_table(c, f));
}
BENCHMARK(BM_HochsterTable)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_Tau0Graph(benchmark::State& state) {
    auto g = skeleton_graph(bl_reference_sphere(static_cast<int>(state.range(0)), 6));
    for (auto _ : state) benchmark::DoNotOptimize(tau0_graph(g));
}
BENCHMARK(BM_Tau0Graph)->DenseRange(8, 16, 2);

static void BM_CanonicalForm(benchmark::State& state) {
    auto c = stacked_sphere(3, static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(c));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(8, 14, 2);

BENCHMARK_MAIN();
