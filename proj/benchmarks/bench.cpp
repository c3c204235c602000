// Microbenchmarks for the hot paths: construction, girth, hexagon counting
// (brute and by congruence accounting), the seeded transitivity search, and
// one full census slice.  Run ./propeller_bench --benchmark_filter=... as
// usual for google-benchmark binaries.

#include <benchmark/benchmark.h>

#include <propeller/aut.hpp>
#include <propeller/census.hpp>
#include <propeller/cycles.hpp>
#include <propeller/families.hpp>
#include <propeller/graph.hpp>

using namespace propeller;

namespace {

// a girth-5 shape valid at every even n >= 30 we use below
PropellerParams generic_tuple(int n) { return {n, 3, 5, 7}; }

void bm_build(benchmark::State& state) {
    const PropellerParams p = generic_tuple(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_propeller(p));
}
BENCHMARK(bm_build)->Arg(30)->Arg(120)->Arg(480);

void bm_girth(benchmark::State& state) {
    const PropellerParams p = generic_tuple(int(state.range(0)));
    const LabeledGraph g = build_propeller(p, false);
    for (auto _ : state) benchmark::DoNotOptimize(propeller_girth(g, p));
}
BENCHMARK(bm_girth)->Arg(30)->Arg(120)->Arg(480);

void bm_hexagons_brute(benchmark::State& state) {
    const PropellerParams p = generic_tuple(int(state.range(0)));
    const LabeledGraph g = build_propeller(p, false);
    for (auto _ : state) benchmark::DoNotOptimize(per_edge_cycle_counts(g, p, 6));
}
BENCHMARK(bm_hexagons_brute)->Arg(30)->Arg(120)->Arg(480);

void bm_hexagons_accounting(benchmark::State& state) {
    const PropellerParams p = generic_tuple(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(predicted_per_edge_n6(p));
}
BENCHMARK(bm_hexagons_accounting)->Arg(30)->Arg(120)->Arg(480);

// the seeded search on a member of the even-rim family: succeeds quickly
void bm_seeded_search_hit(benchmark::State& state) {
    const int n = int(state.range(0));
    const PropellerParams p{n, 2, 2, 1};
    const LabeledGraph g = build_propeller(p, false);
    for (auto _ : state) benchmark::DoNotOptimize(wing_to_flat_automorphism(g, n));
}
BENCHMARK(bm_seeded_search_hit)->Arg(30)->Arg(120)->Arg(480);

// and on a plain tuple, where it must exhaust the tree to say no
void bm_seeded_search_miss(benchmark::State& state) {
    const PropellerParams p = generic_tuple(int(state.range(0)));
    const LabeledGraph g = build_propeller(p, false);
    for (auto _ : state) benchmark::DoNotOptimize(wing_to_flat_automorphism(g, p.n));
}
BENCHMARK(bm_seeded_search_miss)->Arg(30)->Arg(120)->Arg(480);

void bm_classify(benchmark::State& state) {
    const PropellerParams p{int(state.range(0)), 2, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(classify(p));
}
BENCHMARK(bm_classify)->Arg(30)->Arg(120);

void bm_isomorphism(benchmark::State& state) {
    const int n = int(state.range(0));
    const LabeledGraph g = build_propeller({n, 2, 2, 1}, false);
    const LabeledGraph h = build_propeller({n, 2, 2, n / 2 + 1}, false);
    for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(g, h));
}
BENCHMARK(bm_isomorphism)->Arg(30)->Arg(120);

// everything the census does for one value of n, streamed and discarded
void bm_census_slice(benchmark::State& state) {
    CensusOptions opt;
    opt.min_n = opt.max_n = int(state.range(0));
    for (auto _ : state) {
        long long seen = 0;
        census_stream(opt, [&](const CensusRecord& r) { seen += r.girth; });
        benchmark::DoNotOptimize(seen);
    }
}
BENCHMARK(bm_census_slice)->Arg(12)->Arg(20)->Arg(28)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
