#include <benchmark/benchmark.h>

#include "wlcirc/cc.hpp"
#include "wlcirc/circulant.hpp"
#include "wlcirc/graph.hpp"
#include "wlcirc/iso.hpp"
#include "wlcirc/wl.hpp"

using namespace wlcirc;

namespace {

Graph circulant_fixture(int n) {
  std::vector<int> elems{1, n - 1, 2};
  return build_circulant(ConnectionSet(n, elems));
}

void BM_stable2(benchmark::State& state) {
  Graph g = circulant_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wl::stable_coloring(g, 2));
}
BENCHMARK(BM_stable2)->Arg(16)->Arg(27)->Arg(64);

void BM_stable3(benchmark::State& state) {
  Graph g = circulant_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wl::stable_coloring(g, 3));
}
BENCHMARK(BM_stable3)->Arg(16)->Arg(27);

void BM_wl3_equivalence(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = circulant_fixture(n);
  Graph h = build_circulant(ConnectionSet(n, {1, n - 1, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(wl::wl_equivalent(g, h, 3));
}
BENCHMARK(BM_wl3_equivalence)->Arg(16)->Arg(27);

void BM_oracle_isomorphic(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = circulant_fixture(n);
  Graph h = build_circulant(ConnectionSet(n, {1, n - 1, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(iso::oracle_isomorphic(g, h));
}
BENCHMARK(BM_oracle_isomorphic)->Arg(16)->Arg(27);

void BM_point_extension(benchmark::State& state) {
  cc::CoherentConfiguration x = cc::cc_of_graph(circulant_fixture(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cc::point_extension(x, {0}));
}
BENCHMARK(BM_point_extension)->Arg(16)->Arg(27);

void BM_cc_automorphisms(benchmark::State& state) {
  cc::CoherentConfiguration x = cc::cc_of_graph(circulant_fixture(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(iso::cc_automorphisms(x));
}
BENCHMARK(BM_cc_automorphisms)->Arg(16)->Arg(27);

void BM_classify(benchmark::State& state) {
  circ::CirculantScheme s = circ::CirculantScheme::from_cayley(ConnectionSet(16, {1, 15, 8}));
  for (auto _ : state) benchmark::DoNotOptimize(circ::classify(s));
}
BENCHMARK(BM_classify);

}  // namespace

BENCHMARK_MAIN();
