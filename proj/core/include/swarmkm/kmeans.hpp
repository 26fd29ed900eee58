#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "swarmkm/points.hpp"

namespace swarmkm {

struct KMeansConfig {
  std::size_t k = 4;
  double tol = 1e-4;  // max centroid displacement (Euclidean) at convergence
  std::size_t max_iter = 300;
  std::uint64_t seed = 0;  // consumed by the initializers

  void validate() const;
};

struct ClusterResult {
  Centroids centroids;
  std::vector<std::size_t> assignments;
  double inertia = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> inertia_trace;  // one entry per completed cycle
};

/// Nearest centroid per point; ties go to the lowest centroid index.
std::vector<std::size_t> assign_points(const DataMatrix& data, const Centroids& centroids);

/// Means of each cluster. An empty cluster takes the data point farthest from
/// its own (freshly computed) centroid, ties by lowest point index; a point
/// used this way is not reused for another empty cluster in the same update.
Centroids update_centroids(const DataMatrix& data, std::span<const std::size_t> assignments,
                           std::size_t k);

/// Lloyd's algorithm. One iteration is one assignment plus one update; the
/// cycle whose displacement drops to `tol` or below is counted.
ClusterResult lloyd_run(const DataMatrix& data, const Centroids& init, const KMeansConfig& config);

/// Forgy: k distinct rows drawn uniformly without replacement.
Centroids init_random(const DataMatrix& data, std::size_t k, std::uint64_t seed);

/// k-means++ (D^2 weighting), first center uniform.
Centroids init_kmeanspp(const DataMatrix& data, std::size_t k, std::uint64_t seed);

/// k-means++ with the first center fixed to row `first`.
Centroids init_kmeanspp_from(const DataMatrix& data, std::size_t k, std::size_t first,
                             std::uint64_t seed);

/// Sum over points of the squared distance to the nearest centroid.
double inertia(const DataMatrix& data, const Centroids& centroids);

}  // namespace swarmkm
