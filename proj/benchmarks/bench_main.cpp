#include <benchmark/benchmark.h>

#include "saturnum/solver.hpp"
#include "saturnum/spiral.hpp"

namespace {

// One windup attempt per iteration over a fixed pentagon layout at n=40.
void BM_windup(benchmark::State& state) {
  saturnum::PatchWindup w;
  w.record_faces(false);
  std::vector<int> sizes(22, 6);
  for (int i : {0, 1, 2, 3, 4, 5, 16, 17, 18, 19, 20, 21}) sizes[static_cast<std::size_t>(i)] = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(w.try_close(sizes));
  }
}
BENCHMARK(BM_windup);

void BM_generate_isomers_n28(benchmark::State& state) {
  for (auto _ : state) {
    int count = 0;
    saturnum::enumerate_isomers(28, [&](const saturnum::FullereneGraph&,
                                        const std::vector<int>&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_generate_isomers_n28);

void BM_saturation_exact_n30(benchmark::State& state) {
  auto isomers = saturnum::generate_isomers(30);
  saturnum::SolveOptions opts;
  opts.fullerene_root_bound = true;
  for (auto _ : state) {
    for (const auto& g : isomers) {
      auto res = saturnum::saturation_exact(g.as_graph(), opts);
      benchmark::DoNotOptimize(res.s);
    }
  }
}
BENCHMARK(BM_saturation_exact_n30);

}  // namespace

BENCHMARK_MAIN();
