#include "swarmkm/swarm_init.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "swarmkm/errors.hpp"
#include "swarmkm/kmeans.hpp"
#include "swarmkm/random.hpp"

namespace swarmkm {

std::vector<double> encode(const Centroids& centroids) {
  const auto values = centroids.values();
  return {values.begin(), values.end()};
}

Centroids decode(std::span<const double> vector, std::size_t k, std::size_t d) {
  if (k == 0 || d == 0) throw ConfigError("decode needs k >= 1 and d >= 1");
  if (vector.size() != k * d) {
    throw ConfigError("encoded vector has length " + std::to_string(vector.size()) +
                      ", expected k*d = " + std::to_string(k * d));
  }
  return Centroids(k, d, std::vector<double>(vector.begin(), vector.end()));
}

double fitness(std::span<const double> vector, const FitnessSpec& spec) {
  const std::size_t d = spec.d();
  if (spec.k == 0 || spec.sample.empty()) throw ConfigError("fitness needs a sample and k >= 1");
  if (vector.size() != spec.k * d) {
    throw ConfigError("encoded vector has length " + std::to_string(vector.size()) +
                      ", expected k*d = " + std::to_string(spec.k * d));
  }
  // Scores the raw vector in place; decoding would copy per evaluation.
  double total = 0.0;
  for (std::size_t i = 0; i < spec.sample.n(); ++i) {
    const auto point = spec.sample.row(i);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < spec.k; ++c) {
      best = std::min(best, squared_distance(point, vector.subspan(c * d, d)));
    }
    total += best;
  }
  return std::sqrt(total / static_cast<double>(spec.sample.n()));
}

std::size_t default_data_seeds(const pso::PsoConfig& config) { return config.population / 2; }

SwarmInitResult pso_initialize(const DataMatrix& data, std::size_t k, const pso::PsoConfig& pso,
                               const SampleSpec& sample, std::size_t n_data_seeds) {
  pso.validate();
  sample.validate();
  if (k == 0 || k > data.n()) throw ConfigError("k must lie in [1, n]");
  if (n_data_seeds > pso.population) {
    throw ConfigError("data seed count exceeds the swarm population");
  }

  const FitnessSpec spec{sample_subset(data, sample), k};

  const Bounds extent = bounds_of(data);
  Bounds box;
  box.lower.reserve(k * data.d());
  box.upper.reserve(k * data.d());
  for (std::size_t c = 0; c < k; ++c) {
    box.lower.insert(box.lower.end(), extent.lower.begin(), extent.lower.end());
    box.upper.insert(box.upper.end(), extent.upper.begin(), extent.upper.end());
  }

  std::vector<std::vector<double>> seeds;
  seeds.reserve(n_data_seeds);
  for (std::size_t s = 0; s < n_data_seeds; ++s) {
    seeds.push_back(encode(init_random(data, k, derive_seed(pso.seed, Stream::kForgy, s))));
  }

  const pso::Objective objective = [&spec](std::span<const double> v) { return fitness(v, spec); };
  auto found = pso::run(objective, box, pso, seeds);

  SwarmInitResult result;
  result.centroids = decode(found.best_position, k, data.d());
  result.gbest_trace = std::move(found.trace);
  result.best_fitness = found.best_fitness;
  result.iterations = found.iterations;
  result.evaluations = found.evaluations;
  result.sample_size = spec.sample.n();
  return result;
}

}  // namespace swarmkm
