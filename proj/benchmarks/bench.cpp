#include <benchmark/benchmark.h>

#include "crossint/bounds.hpp"
#include "crossint/branching.hpp"
#include "crossint/closure.hpp"
#include "crossint/constructions.hpp"
#include "crossint/search.hpp"
#include "crossint/structure.hpp"

using namespace crossint;

static void BM_EnumerateKSets(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for (SubsetWord s : enumerate_ksets(n, n / 2)) count += s.size();
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateKSets)->Arg(12)->Arg(16)->Arg(20);

static void BM_ComputeBasis(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Family h = build_H(n, 5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(compute_basis(h, 2, 5).members.size());
}
BENCHMARK(BM_ComputeBasis)->Arg(10)->Arg(14);

static void BM_Saturate(benchmark::State& state) {
    const Family a = build_A(10, 4, 2);
    const Family seed = Family::uniform(10, 4, {SubsetWord::of({1, 2, 3, 4})});
    for (auto _ : state) benchmark::DoNotOptimize(saturate(seed, a, 2).F.size());
}
BENCHMARK(BM_Saturate);

static void BM_SingleSearch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(max_nontrivial_t_intersecting(n, 3, 2).nodes_explored);
}
BENCHMARK(BM_SingleSearch)->Arg(6)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_SaturatedPairs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PairEnumerator pairs(n, 3, 2);
    for (auto _ : state) {
        const auto stats = pairs.enumerate([](const Bitset&, const Bitset&) { return true; });
        benchmark::DoNotOptimize(stats.closures);
    }
}
BENCHMARK(BM_SaturatedPairs)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Branching(benchmark::State& state) {
    const Family h = build_H(9, 4, 2);
    const SaturatedPair p = saturate(h, h, 2);
    const auto r1 = min_r_for_cover(p.basis_F, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_branching(p.basis_F, p.basis_G, r1, 2, 4).survivors.size());
    }
}
BENCHMARK(BM_Branching)->Unit(benchmark::kMillisecond);

static void BM_HiltonSum(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_hilton_sum(12, 2, 3).verdict);
}
BENCHMARK(BM_HiltonSum)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
