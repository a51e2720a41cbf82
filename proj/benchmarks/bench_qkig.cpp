#include <benchmark/benchmark.h>

#include <qkig/brion_expansion.hpp>
#include <qkig/geometry_oracle.hpp>
#include <qkig/qk_ring.hpp>

using namespace qkig;

static void BM_ChevalleyTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto basis = basis_list(n);
    for (auto _ : state) {
        for (const Pair& v : basis) benchmark::DoNotOptimize(quantum_chevalley(n, v));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(basis.size()));
}
BENCHMARK(BM_ChevalleyTable)->DenseRange(2, 12, 5);

static void BM_SeidelCommutation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto basis = basis_list(n);
    for (auto _ : state) {
        for (const Pair& v : basis) {
            const RingElement x = RingElement::basis(n, v);
            benchmark::DoNotOptimize(quantum_chevalley(seidel(x)) == seidel(quantum_chevalley(x)));
        }
    }
}
BENCHMARK(BM_SeidelCommutation)->Arg(4)->Arg(12);

static void BM_ZetaInverse(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ideal_to_schubert(n));
}
BENCHMARK(BM_ZetaInverse)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);

static void BM_BrionReconstruction(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const BasisChange bc = ideal_to_schubert(n);
    for (auto _ : state) {
        for (const Pair& v : bc.basis) benchmark::DoNotOptimize(reconstruct_classical_chevalley(bc, v));
    }
}
BENCHMARK(BM_BrionReconstruction)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);

static void BM_ConicThrough(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Plane2 x = random_isotropic_plane(n, 1), y = random_isotropic_plane(n, 2);
    std::uint64_t seed = 3;
    for (auto _ : state) {
        const Plane2 z = random_isotropic_plane(n, seed++);
        benchmark::DoNotOptimize(conic_through(x, y, z));
    }
}
BENCHMARK(BM_ConicThrough)->DenseRange(2, 4, 1)->Unit(benchmark::kMicrosecond);

static void BM_MembershipSuite(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(membership_suite(3, d, 50, 7));
}
BENCHMARK(BM_MembershipSuite)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
