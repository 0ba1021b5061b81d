#include <benchmark/benchmark.h>

#include "wellcov/classify.hpp"
#include "wellcov/decomposition.hpp"
#include "wellcov/family.hpp"
#include "wellcov/independence.hpp"
#include "wellcov/shelling.hpp"

using namespace wellcov;

static void BM_FacetEnumerationCycle(benchmark::State& state) {
    Graph g = family::cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(maximal_stable_sets(g).facets.size());
}
BENCHMARK(BM_FacetEnumerationCycle)->Arg(9)->Arg(13)->Arg(17)->Arg(21);

static void BM_FacetEnumerationWhiskerCycle(benchmark::State& state) {
    Graph g = family::whisker_of(family::cycle(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(maximal_stable_sets(g).facets.size());
}
BENCHMARK(BM_FacetEnumerationWhiskerCycle)->Arg(7)->Arg(10)->Arg(13);

static void BM_VertexDecomposableWhiskerCycle(benchmark::State& state) {
    Graph g = family::whisker_of(family::cycle(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(vertex_decomposable(g).status);
}
BENCHMARK(BM_VertexDecomposableWhiskerCycle)->Arg(5)->Arg(7)->Arg(9);

static void BM_VertexDecomposableCycle(benchmark::State& state) {
    Graph g = family::cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(vertex_decomposable(g).status);
}
BENCHMARK(BM_VertexDecomposableCycle)->Arg(7)->Arg(9)->Arg(11);

static void BM_ShellableCycle(benchmark::State& state) {
    Graph g = family::cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(shellable(g, 40).status);
}
BENCHMARK(BM_ShellableCycle)->Arg(5)->Arg(7)->Arg(9)->Arg(11);

static void BM_ShellablePath(benchmark::State& state) {
    Graph g = family::path(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(shellable(g, 40).status);
}
BENCHMARK(BM_ShellablePath)->Arg(6)->Arg(8)->Arg(10);

static void BM_CmOracleWhiskerCycle(benchmark::State& state) {
    Graph g = family::whisker_of(family::cycle(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(cm_oracle(g).cm.status);
}
BENCHMARK(BM_CmOracleWhiskerCycle)->Arg(7)->Arg(9);

static void BM_KonigCertificate(benchmark::State& state) {
    Graph g = family::whisker_of(family::cycle(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(konig_certificate(g).status);
}
BENCHMARK(BM_KonigCertificate)->Arg(10)->Arg(15);

BENCHMARK_MAIN();
