#include <benchmark/benchmark.h>

#include "swarmkm/dataset.hpp"
#include "swarmkm/pso.hpp"
#include "swarmkm/swarm_init.hpp"

namespace {

using namespace swarmkm;

void BM_Fitness(benchmark::State& state) {
  const auto data = generate_blobs(BlobSpec{4, 38, 4, 0.3, {}}, 1).data;
  const FitnessSpec spec{sample_subset(data, SampleSpec{1.0, 0}), 4};
  const auto v = encode(generate_blobs(BlobSpec{4, 1, 4, 0.3, {}}, 2).centers);
  for (auto _ : state) benchmark::DoNotOptimize(fitness(v, spec));
}
BENCHMARK(BM_Fitness);

void BM_PsoSphere(benchmark::State& state) {
  const Bounds box{std::vector<double>(4, -10.0), std::vector<double>(4, 10.0)};
  pso::PsoConfig cfg;
  cfg.max_iter = 200;
  for (auto _ : state) {
    ++cfg.seed;
    benchmark::DoNotOptimize(pso::run(pso::sphere, box, cfg));
  }
}
BENCHMARK(BM_PsoSphere)->Unit(benchmark::kMillisecond);

void BM_PsoInitialize(benchmark::State& state) {
  const auto data = generate_blobs(BlobSpec{4, 38, 4, 0.3, {}}, 1).data;
  pso::PsoConfig cfg;
  cfg.threads = static_cast<std::size_t>(state.range(0));
  const SampleSpec sample{1.0, 0};
  for (auto _ : state) {
    ++cfg.seed;
    benchmark::DoNotOptimize(pso_initialize(data, 4, cfg, sample, default_data_seeds(cfg)));
  }
}
BENCHMARK(BM_PsoInitialize)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
