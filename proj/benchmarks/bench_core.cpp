#include <benchmark/benchmark.h>

#include "treelift/arborescence.hpp"
#include "treelift/digraph.hpp"
#include "treelift/identities.hpp"
#include "treelift/lift.hpp"
#include "treelift/prng.hpp"

using namespace treelift;

namespace {

Digraph complete_graph(int n) {
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) g.add_edge(u, v, Weight(1));
    return g;
}

Digraph random_weighted(int n, std::uint64_t seed) {
    Prng rng(seed);
    return with_random_rational_weights(complete_graph(n), rng, 1, 20);
}

void bm_det_rational(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Digraph g = random_weighted(4, 7);
    LiftGraph lg = build_lift(g);
    // random rows from the lifted Laplacian give realistic entries
    RingMatrix lap = laplacian(lg.graph);
    std::vector<int> remove;
    for (int i = n; i < static_cast<int>(lap.size()); ++i) remove.push_back(i);
    RingMatrix m = minor_by_indices(lap, remove);
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(bm_det_rational)->Arg(16)->Arg(32)->Arg(48)->Arg(63);

void bm_det_symbolic_lift_minor(benchmark::State& state) {
    Digraph g = with_symbolic_weights(complete_graph(3));
    LiftGraph lg = build_lift(g);
    RingMatrix m = minor_by_indices(laplacian(lg.graph), {0});
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(bm_det_symbolic_lift_minor);

void bm_build_lift_k4(benchmark::State& state) {
    Digraph g = random_weighted(4, 11);
    for (auto _ : state) benchmark::DoNotOptimize(build_lift(g));
}
BENCHMARK(bm_build_lift_k4);

void bm_phi_report_k4(benchmark::State& state) {
    Digraph g = random_weighted(4, 13);
    for (auto _ : state) benchmark::DoNotOptimize(phi_report(g));
}
BENCHMARK(bm_phi_report_k4);

void bm_r_polynomial_k4(benchmark::State& state) {
    Digraph g = random_weighted(4, 17);
    LiftGraph lg = build_lift(g);
    for (auto _ : state) benchmark::DoNotOptimize(r_polynomial(g, lg));
}
BENCHMARK(bm_r_polynomial_k4);

void bm_walk_support_table(benchmark::State& state) {
    Digraph g = random_weighted(4, 19);
    int len = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(closed_walk_support_sums(g, len));
}
BENCHMARK(bm_walk_support_table)->Arg(8)->Arg(12);

void bm_enumerate_trees_k4(benchmark::State& state) {
    Digraph g = complete_graph(4);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(g, 0));
}
BENCHMARK(bm_enumerate_trees_k4);

} // namespace

BENCHMARK_MAIN();
