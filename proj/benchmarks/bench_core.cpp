#include "treewalk/canonical.hpp"
#include "treewalk/enumerate.hpp"
#include "treewalk/extremal.hpp"
#include "treewalk/forest.hpp"
#include "treewalk/homorder.hpp"
#include "treewalk/spectral.hpp"
#include "treewalk/transfer.hpp"
#include "treewalk/walk.hpp"

#include <benchmark/benchmark.h>

using namespace treewalk;

namespace {

WeightedGraph sample_tree(std::size_t n) {
    Xorshift64Star rng(n);
    return random_weighted_tree(rng, n, 0.1, 10.0);
}

void BM_AlphaExact(benchmark::State& state) {
    const WeightedGraph t = sample_tree(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exact_stats(t));
}
BENCHMARK(BM_AlphaExact)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_AlphaTree(benchmark::State& state) {
    const WeightedGraph t = sample_tree(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(alpha_tree(t));
}
BENCHMARK(BM_AlphaTree)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_AlphaSpectral(benchmark::State& state) {
    const WeightedGraph t = sample_tree(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(alpha_spectral(t));
}
BENCHMARK(BM_AlphaSpectral)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

// Dense forest enumeration on a small non-tree graph.
void BM_AlphaForestGraph(benchmark::State& state) {
    Xorshift64Star rng(3);
    const WeightedGraph g = random_connected_graph(rng, 7, 0.5, 0.5, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(alpha_forest(g));
}
BENCHMARK(BM_AlphaForestGraph);

void BM_CanonicalForm(benchmark::State& state) {
    const WeightedGraph t = sample_tree(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t));
}
BENCHMARK(BM_CanonicalForm)->Arg(10)->Arg(100);

void BM_FreeTrees(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_free_trees(n));
}
BENCHMARK(BM_FreeTrees)->Arg(8)->Arg(10);

void BM_HomCount(benchmark::State& state) {
    const WeightedGraph t = make_unit_path(8);
    const SimpleGraph g = complete_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hom_count(t, g));
}
BENCHMARK(BM_HomCount)->Arg(4)->Arg(6);

void BM_ExtremalScan(benchmark::State& state) {
    const WeightMultiset w({7, 5, 4, 2, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(scan_family(w, Statistic::alpha));
}
BENCHMARK(BM_ExtremalScan)->Unit(benchmark::kMillisecond);

void BM_Hasse(benchmark::State& state) {
    const auto trees = enumerate_free_trees(8);
    for (auto _ : state) benchmark::DoNotOptimize(build_hasse(trees, TransferMode::size));
}
BENCHMARK(BM_Hasse)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
