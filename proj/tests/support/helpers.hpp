#pragma once

#include <cstdint>
#include <vector>

#include "swarmkm/points.hpp"
#include "swarmkm/random.hpp"

namespace swarmkm::testing_support {

inline std::vector<std::vector<double>> rows_of(const PointSet& points) {
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < points.rows(); ++i) {
    const auto r = points.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

inline DataMatrix random_data(Rng& rng, std::size_t n, std::size_t d, double lo = -5.0,
                              double hi = 5.0) {
  std::vector<double> values(n * d);
  for (auto& v : values) v = uniform_real(rng, lo, hi);
  return DataMatrix(n, d, std::move(values));
}

inline Centroids random_centroids(Rng& rng, std::size_t k, std::size_t d, double lo = -5.0,
                                  double hi = 5.0) {
  std::vector<double> values(k * d);
  for (auto& v : values) v = uniform_real(rng, lo, hi);
  return Centroids(k, d, std::move(values));
}

}  // namespace swarmkm::testing_support
