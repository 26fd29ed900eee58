#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "swarmkm/dataset.hpp"
#include "swarmkm/points.hpp"
#include "swarmkm/pso.hpp"

namespace swarmkm {

// Particles carry k centroids flattened centroid-major: the d coordinates of
// center 0, then center 1, and so on.

std::vector<double> encode(const Centroids& centroids);
Centroids decode(std::span<const double> vector, std::size_t k, std::size_t d);

/// The fixed subset used to score every particle of one swarm run.
struct FitnessSpec {
  DataMatrix sample;
  std::size_t k = 0;

  std::size_t d() const noexcept { return sample.d(); }
};

/// Root-mean nearest-centroid squared distance over the sample:
///   sqrt( (1/|S|) * sum_{x in S} min_c ||x - c||^2 )
double fitness(std::span<const double> vector, const FitnessSpec& spec);

/// Forgy candidates injected by default: half the swarm.
std::size_t default_data_seeds(const pso::PsoConfig& config);

struct SwarmInitResult {
  Centroids centroids;
  std::vector<double> gbest_trace;
  double best_fitness = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  std::size_t sample_size = 0;
};

/// Runs the swarm over the k*d box tiled from bounds_of(data), with
/// `n_data_seeds` particles started at distinct Forgy draws, and returns the
/// decoded gbest as initial centroids.
SwarmInitResult pso_initialize(const DataMatrix& data, std::size_t k,
                               const pso::PsoConfig& pso, const SampleSpec& sample,
                               std::size_t n_data_seeds);

}  // namespace swarmkm
