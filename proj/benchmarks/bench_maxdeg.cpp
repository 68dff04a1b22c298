#include <benchmark/benchmark.h>

#include "maxdeg/exactf.hpp"
#include "maxdeg/families.hpp"
#include "maxdeg/forest.hpp"
#include "maxdeg/io.hpp"
#include "maxdeg/oracle.hpp"
#include "maxdeg/random.hpp"

namespace {

void BM_ExactFSparse(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    maxdeg::Graph g = maxdeg::random_graph(n, 4.0 / n, 1);
    for (auto _ : state) {
        maxdeg::ExactF res = maxdeg::exact_f(g);
        benchmark::DoNotOptimize(res.value);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_ExactFSparse)->RangeMultiplier(2)->Range(1000, 16000)->Complexity();

// star unions never hit the early diff-0 stop until every center is
// peeled, so they exercise the long-trace path
void BM_ExactFStarUnion(benchmark::State& state) {
    const int delta = static_cast<int>(state.range(0));
    maxdeg::Graph g = maxdeg::star_union_delta(delta).graph;
    for (auto _ : state) {
        maxdeg::ExactF res = maxdeg::exact_f(g);
        benchmark::DoNotOptimize(res.value);
    }
}
BENCHMARK(BM_ExactFStarUnion)->Arg(45)->Arg(500)->Arg(5000);

void BM_BruteFk(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    maxdeg::Graph g = maxdeg::random_graph(n, 0.4, 7);
    for (auto _ : state) {
        maxdeg::BruteResult res = maxdeg::brute_fk(g, 3, n);
        benchmark::DoNotOptimize(res.value);
    }
}
BENCHMARK(BM_BruteFk)->DenseRange(8, 14, 2);

void BM_ForestFk(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    maxdeg::Graph f = maxdeg::random_forest(n, 3);
    for (auto _ : state) {
        maxdeg::Certificate cert = maxdeg::forest_fk(f, 2);
        benchmark::DoNotOptimize(cert.deleted);
    }
}
BENCHMARK(BM_ForestFk)->Arg(216)->Arg(1000)->Arg(8000);

void BM_Graph6RoundTrip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    maxdeg::Graph g = maxdeg::random_graph(n, 0.2, 11);
    for (auto _ : state) {
        maxdeg::Graph back = maxdeg::parse_graph6(maxdeg::emit_graph6(g));
        benchmark::DoNotOptimize(back.vertex_count());
    }
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(62)->Arg(500);

} // namespace

BENCHMARK_MAIN();
