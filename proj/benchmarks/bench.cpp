// Microbenchmarks for the hot paths: the exact search on structured inputs,
// raw predicate evaluation, and the expansion construction. Run with
// --benchmark_filter=<regex> to narrow.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <string>

#include "monopolies/families.hpp"
#include "monopolies/graph.hpp"
#include "monopolies/predicates.hpp"
#include "monopolies/reduction.hpp"
#include "monopolies/solver.hpp"

namespace {

using namespace monopolies;

Graph gen(const std::string& text) { return generate(parse_family_spec(text)); }

SolveOptions one_worker() {
    SolveOptions o;
    o.workers = 1;
    return o;
}

void bm_solve_cycle_k0(benchmark::State& state) {
    const Graph g = gen("cycle:" + std::to_string(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_k_monopoly(g, 0, one_worker()).optimum);
}
BENCHMARK(bm_solve_cycle_k0)->Arg(16)->Arg(24)->Arg(32);

void bm_solve_complete_k1(benchmark::State& state) {
    const Graph g = gen("complete:" + std::to_string(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_k_monopoly(g, 1, one_worker()).optimum);
}
BENCHMARK(bm_solve_complete_k1)->Arg(12)->Arg(16)->Arg(20);

void bm_solve_family_f_k1(benchmark::State& state) {
    const Graph g = gen("family_f:" + std::to_string(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_k_monopoly(g, 1, one_worker()).optimum);
}
BENCHMARK(bm_solve_family_f_k1)->Arg(4)->Arg(5)->Arg(6);

void bm_solve_signed_total(benchmark::State& state) {
    const Graph g = gen("cycle:" + std::to_string(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_signed_total_k_dom(g, 2, one_worker()).optimum);
}
BENCHMARK(bm_solve_signed_total)->Arg(12)->Arg(16)->Arg(20);

// Predicate throughput on a fixed random graph with a fixed pseudo-random
// stream of subsets. Measures the per-check cost the search pays at every
// node.
void bm_predicate_monopoly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(99);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool present =
                std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
            if (!present && std::uniform_real_distribution<double>(0, 1)(rng) < 0.3)
                edges.emplace_back(u, v);
        }
    const Graph g = Graph::from_edges(n, edges);

    std::vector<VertexSet> samples;
    std::uniform_int_distribution<uint32_t> dist(1, (1u << n) - 1);
    for (int i = 0; i < 256; ++i) {
        VertexSet s = VertexSet::empty_set(n);
        const uint32_t mask = dist(rng);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.insert(v);
        samples.push_back(s);
    }

    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_k_monopoly(g, samples[i], 0));
        i = (i + 1) % samples.size();
    }
}
BENCHMARK(bm_predicate_monopoly)->Arg(12)->Arg(20);

void bm_build_reduction(benchmark::State& state) {
    const Graph g = gen("cycle:" + std::to_string(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_reduction(g).h.order());
}
BENCHMARK(bm_build_reduction)->Arg(8)->Arg(16)->Arg(32);

void bm_verify_reduction_small(benchmark::State& state) {
    const Graph g = gen("path:3");
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_reduction_identity(g, one_worker()).equal);
}
BENCHMARK(bm_verify_reduction_small);

} // namespace

BENCHMARK_MAIN();
