#include "swarmkm/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "swarmkm/errors.hpp"
#include "swarmkm/random.hpp"

namespace swarmkm {
namespace {

void check_dims(const DataMatrix& data, const Centroids& centroids) {
  if (centroids.empty()) throw ConfigError("centroid set is empty");
  if (centroids.d() != data.d()) {
    throw ConfigError("centroids have " + std::to_string(centroids.d()) +
                      " dimensions but data has " + std::to_string(data.d()));
  }
}

void check_k(const DataMatrix& data, std::size_t k) {
  if (k == 0) throw ConfigError("k must be at least 1");
  if (k > data.n()) {
    throw ConfigError("k = " + std::to_string(k) + " exceeds the number of points (" +
                      std::to_string(data.n()) + ")");
  }
}

struct Nearest {
  std::size_t index = 0;
  double distance = 0.0;  // squared
};

Nearest nearest(std::span<const double> point, const Centroids& centroids) {
  Nearest best{0, squared_distance(point, centroids.center(0))};
  for (std::size_t c = 1; c < centroids.k(); ++c) {
    const double dist = squared_distance(point, centroids.center(c));
    if (dist < best.distance) best = {c, dist};
  }
  return best;
}

// Assignment pass that also returns the objective for `centroids`.
double assign_into(const DataMatrix& data, const Centroids& centroids,
                   std::vector<std::size_t>& assignments) {
  assignments.resize(data.n());
  double total = 0.0;
  for (std::size_t i = 0; i < data.n(); ++i) {
    const auto hit = nearest(data.row(i), centroids);
    assignments[i] = hit.index;
    total += hit.distance;
  }
  return total;
}

Centroids kmeanspp_continue(const DataMatrix& data, std::size_t k, std::size_t first, Rng& rng) {
  std::vector<double> centers;
  centers.reserve(k * data.d());
  std::vector<bool> chosen(data.n(), false);
  std::vector<double> weight(data.n());

  auto take = [&](std::size_t i) {
    const auto row = data.row(i);
    centers.insert(centers.end(), row.begin(), row.end());
    chosen[i] = true;
  };
  take(first);
  for (std::size_t i = 0; i < data.n(); ++i) weight[i] = squared_distance(data.row(i), data.row(first));

  while (centers.size() < k * data.d()) {
    const double total = std::accumulate(weight.begin(), weight.end(), 0.0);
    std::size_t pick = data.n();
    if (total > 0.0) {
      const double target = uniform01(rng) * total;
      double cumulative = 0.0;
      std::size_t last_positive = data.n();
      for (std::size_t i = 0; i < data.n(); ++i) {
        if (weight[i] <= 0.0) continue;
        last_positive = i;
        cumulative += weight[i];
        if (cumulative > target) {
          pick = i;
          break;
        }
      }
      if (pick == data.n()) pick = last_positive;
    } else {
      // Every remaining point duplicates a chosen center: fall back to a
      // uniform pick among rows not yet taken.
      std::vector<std::size_t> free;
      for (std::size_t i = 0; i < data.n(); ++i) {
        if (!chosen[i]) free.push_back(i);
      }
      pick = free[uniform_index(rng, free.size())];
    }
    take(pick);
    for (std::size_t i = 0; i < data.n(); ++i) {
      weight[i] = std::min(weight[i], squared_distance(data.row(i), data.row(pick)));
    }
  }
  return Centroids(k, data.d(), std::move(centers));
}

}  // namespace

void KMeansConfig::validate() const {
  if (k == 0) throw ConfigError("k must be at least 1");
  if (max_iter == 0) throw ConfigError("max_iter must be at least 1");
  if (!(tol >= 0.0) || !std::isfinite(tol)) throw ConfigError("tol must be a finite value >= 0");
}

std::vector<std::size_t> assign_points(const DataMatrix& data, const Centroids& centroids) {
  check_dims(data, centroids);
  std::vector<std::size_t> assignments;
  assign_into(data, centroids, assignments);
  return assignments;
}

Centroids update_centroids(const DataMatrix& data, std::span<const std::size_t> assignments,
                           std::size_t k) {
  if (k == 0) throw ConfigError("k must be at least 1");
  if (assignments.size() != data.n()) {
    throw ConfigError("assignment count does not match the number of points");
  }
  const std::size_t d = data.d();
  std::vector<double> sums(k * d, 0.0);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < data.n(); ++i) {
    const std::size_t c = assignments[i];
    if (c >= k) throw ConfigError("assignment " + std::to_string(c) + " is out of range");
    const auto row = data.row(i);
    for (std::size_t j = 0; j < d; ++j) sums[c * d + j] += row[j];
    ++counts[c];
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) sums[c * d + j] /= static_cast<double>(counts[c]);
  }

  if (std::find(counts.begin(), counts.end(), std::size_t{0}) != counts.end()) {
    std::vector<double> spread(data.n());
    for (std::size_t i = 0; i < data.n(); ++i) {
      const std::size_t c = assignments[i];
      spread[i] = squared_distance(data.row(i), std::span<const double>(sums).subspan(c * d, d));
    }
    std::vector<bool> used(data.n(), false);
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] != 0) continue;
      std::size_t far = data.n();
      for (std::size_t i = 0; i < data.n(); ++i) {
        if (used[i]) continue;
        if (far == data.n() || spread[i] > spread[far]) far = i;
      }
      if (far == data.n()) throw ConfigError("more empty clusters than points to relocate them to");
      used[far] = true;
      const auto row = data.row(far);
      std::copy(row.begin(), row.end(), sums.begin() + static_cast<std::ptrdiff_t>(c * d));
    }
  }
  return Centroids(k, d, std::move(sums));
}

ClusterResult lloyd_run(const DataMatrix& data, const Centroids& init, const KMeansConfig& config) {
  config.validate();
  check_dims(data, init);
  if (init.k() != config.k) {
    throw ConfigError("initial centroid count " + std::to_string(init.k()) +
                      " does not match k = " + std::to_string(config.k));
  }

  ClusterResult result;
  result.centroids = init;
  assign_into(data, result.centroids, result.assignments);
  for (std::size_t it = 0; it < config.max_iter; ++it) {
    Centroids next = update_centroids(data, result.assignments, config.k);
    double displacement = 0.0;
    for (std::size_t c = 0; c < config.k; ++c) {
      displacement = std::max(
          displacement, std::sqrt(squared_distance(next.center(c), result.centroids.center(c))));
    }
    result.centroids = std::move(next);
    result.inertia_trace.push_back(assign_into(data, result.centroids, result.assignments));
    ++result.iterations;
    if (displacement <= config.tol) {
      result.converged = true;
      break;
    }
  }
  result.inertia = result.inertia_trace.back();
  return result;
}

Centroids init_random(const DataMatrix& data, std::size_t k, std::uint64_t seed) {
  check_k(data, k);
  Rng rng(seed);
  std::vector<std::size_t> order(data.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> centers;
  centers.reserve(k * data.d());
  for (std::size_t c = 0; c < k; ++c) {
    std::swap(order[c], order[c + uniform_index(rng, data.n() - c)]);
    const auto row = data.row(order[c]);
    centers.insert(centers.end(), row.begin(), row.end());
  }
  return Centroids(k, data.d(), std::move(centers));
}

Centroids init_kmeanspp(const DataMatrix& data, std::size_t k, std::uint64_t seed) {
  check_k(data, k);
  Rng rng(seed);
  const std::size_t first = uniform_index(rng, data.n());
  return kmeanspp_continue(data, k, first, rng);
}

Centroids init_kmeanspp_from(const DataMatrix& data, std::size_t k, std::size_t first,
                             std::uint64_t seed) {
  check_k(data, k);
  if (first >= data.n()) throw ConfigError("first center index is out of range");
  Rng rng(seed);
  return kmeanspp_continue(data, k, first, rng);
}

double inertia(const DataMatrix& data, const Centroids& centroids) {
  check_dims(data, centroids);
  double total = 0.0;
  for (std::size_t i = 0; i < data.n(); ++i) total += nearest(data.row(i), centroids).distance;
  return total;
}

}  // namespace swarmkm
