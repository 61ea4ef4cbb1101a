#include <benchmark/benchmark.h>

#include "indturan/canonical.hpp"
#include "indturan/constructions.hpp"
#include "indturan/cycles.hpp"
#include "indturan/exact_solver.hpp"
#include "indturan/hypergraph.hpp"
#include "indturan/search.hpp"

using namespace indturan;

static void BM_FindKss(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), Rational(1, 2), 7);
    for (auto _ : state) benchmark::DoNotOptimize(find_kss(g, 4));
}
BENCHMARK(BM_FindKss)->Arg(32)->Arg(64)->Arg(128);

static void BM_InducedCopyC6(benchmark::State& state) {
    const Bipartition b = pp_incidence(static_cast<unsigned>(state.range(0)));
    const Graph c6 = named_graph("cycle(6)");
    for (auto _ : state) benchmark::DoNotOptimize(find_induced_copy(b.graph(), c6));
}
BENCHMARK(BM_InducedCopyC6)->Arg(3)->Arg(7)->Arg(13);

static void BM_CanonicalCode(benchmark::State& state) {
    const Graph g = random_graph(9, Rational(1, 2), static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalCode)->Arg(1)->Arg(2);

static void BM_CanonicalCodeSymmetric(benchmark::State& state) {
    const Graph g = named_graph("cycle(9)");
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalCodeSymmetric);

static void BM_ExtremalC4(benchmark::State& state) {
    const auto c = ConstraintSet::induced_star(named_graph("cycle(4)"), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(extremal_search(static_cast<std::size_t>(state.range(0)), c, 1));
}
BENCHMARK(BM_ExtremalC4)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_HomCycleCount(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), Rational(1, 4), 3);
    for (auto _ : state) benchmark::DoNotOptimize(hom_cycle_count(g, 3));
}
BENCHMARK(BM_HomCycleCount)->Arg(32)->Arg(128);

static void BM_InducedC6Search(benchmark::State& state) {
    const Bipartition b = pp_incidence(static_cast<unsigned>(state.range(0)));
    CycleParams p;
    p.k = 3;
    for (auto _ : state) benchmark::DoNotOptimize(find_induced_alternating_cycle(b, 3, 2, p, 1));
}
BENCHMARK(BM_InducedC6Search)->Arg(3)->Arg(5);

static void BM_HeavyEdges(benchmark::State& state) {
    std::vector<HyperEdge> edges;
    for (Vertex a = 0; a < 6; ++a)
        for (Vertex b = 6; b < 12; ++b)
            for (Vertex c = 12; c < 18; ++c)
                if ((a + b + c) % 3 != 0) edges.push_back({a, b, c});
    const UniformHypergraph h(18, 3, edges);
    for (auto _ : state) benchmark::DoNotOptimize(heavy_edges(h, Rational(1, 2)));
}
BENCHMARK(BM_HeavyEdges);

BENCHMARK_MAIN();
