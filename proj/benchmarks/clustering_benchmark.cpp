#include <benchmark/benchmark.h>

#include "swarmkm/dataset.hpp"
#include "swarmkm/kmeans.hpp"

namespace {

using namespace swarmkm;

DataMatrix blobs(std::size_t n_per, std::size_t d) {
  return generate_blobs(BlobSpec{8, n_per, d, 0.8, {}}, 7).data;
}

void BM_AssignPoints(benchmark::State& state) {
  const auto data = blobs(static_cast<std::size_t>(state.range(0)), 8);
  const auto centroids = init_random(data, 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(assign_points(data, centroids));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(data.n()));
}
BENCHMARK(BM_AssignPoints)->Arg(100)->Arg(1000)->Arg(10000);

void BM_LloydRun(benchmark::State& state) {
  const auto data = blobs(static_cast<std::size_t>(state.range(0)), 4);
  const auto init = init_random(data, 8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lloyd_run(data, init, KMeansConfig{8, 1e-4, 300, 0}));
}
BENCHMARK(BM_LloydRun)->Arg(100)->Arg(1000);

void BM_InitKMeansPP(benchmark::State& state) {
  const auto data = blobs(static_cast<std::size_t>(state.range(0)), 4);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(init_kmeanspp(data, 8, ++seed));
}
BENCHMARK(BM_InitKMeansPP)->Arg(100)->Arg(1000);

}  // namespace
