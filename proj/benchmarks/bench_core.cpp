#include <benchmark/benchmark.h>

#include "cokasch/module.hpp"
#include "cokasch/oracle.hpp"
#include "cokasch/presentation.hpp"
#include "cokasch/properties.hpp"
#include "cokasch/ring.hpp"

using namespace cokasch;

namespace {

// Deterministic dense test matrix with mixed magnitudes, the shape the
// presentation solvers chew on.
IntMatrix dense_matrix(int n) {
  IntMatrix m(n, n);
  i64 v = 17;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      v = (v * 37 + 11) % 1000 - 500;
      m(r, c) = v;
    }
  return m;
}

RingData t2f2_data() {
  RingData r;
  r.orders = {2, 2, 2};
  r.structure = {
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}},
      {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}},
      {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}},
  };
  r.one = {1, 0, 1};
  return r;
}

void bench_smith_decompose(benchmark::State& state) {
  const IntMatrix m = dense_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SmithDecomposition dec = smith_decompose(m);
    benchmark::DoNotOptimize(dec.d);
  }
}

void bench_hom_space(benchmark::State& state) {
  RingPtr ring = FiniteRing::create(t2f2_data());
  ModulePtr reg = FiniteModule::regular(ring);
  ModulePtr doubled = FiniteModule::direct_sum(reg, reg);
  for (auto _ : state) {
    HomSpace hs = hom_space(doubled, reg);
    benchmark::DoNotOptimize(hs.var_moduli);
  }
}

void bench_enumerate_submodules(benchmark::State& state) {
  RingPtr ring = FiniteRing::create(t2f2_data());
  ModulePtr doubled =
      FiniteModule::direct_sum(FiniteModule::regular(ring), FiniteModule::regular(ring));
  for (auto _ : state) {
    std::vector<Submodule> subs = enumerate_submodules(doubled);
    benchmark::DoNotOptimize(subs.size());
  }
}

void bench_is_co_kasch(benchmark::State& state) {
  RingPtr ring = FiniteRing::create(t2f2_data());
  auto catalog = simple_catalog(ring);
  ModulePtr doubled =
      FiniteModule::direct_sum(FiniteModule::regular(ring), FiniteModule::regular(ring));
  for (auto _ : state) {
    PropertyReport report = is_co_kasch(doubled, catalog);
    benchmark::DoNotOptimize(report.verdict);
  }
}

BENCHMARK(bench_smith_decompose)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bench_hom_space);
BENCHMARK(bench_enumerate_submodules);
BENCHMARK(bench_is_co_kasch);

}  // namespace

BENCHMARK_MAIN();
