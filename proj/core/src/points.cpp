#include "swarmkm/points.hpp"

#include <cmath>
#include <string>

#include "swarmkm/errors.hpp"

namespace swarmkm {

PointSet::PointSet(std::size_t rows, std::size_t dims, std::vector<double> values)
    : rows_(rows), dims_(dims), values_(std::move(values)) {
  if (rows_ == 0 || dims_ == 0) {
    throw ConfigError("point set needs at least one row and one dimension");
  }
  if (values_.size() != rows_ * dims_) {
    throw ConfigError("point set holds " + std::to_string(values_.size()) + " values, expected " +
                      std::to_string(rows_) + "x" + std::to_string(dims_));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DataError("non-finite value at row " + std::to_string(i / dims_ + 1) + ", column " +
                      std::to_string(i % dims_ + 1));
    }
  }
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ConfigError("point set needs at least one row");
  const std::size_t dims = rows.front().size();
  std::vector<double> values;
  values.reserve(rows.size() * dims);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dims) {
      throw ConfigError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                        " entries, expected " + std::to_string(dims));
    }
    values.insert(values.end(), rows[i].begin(), rows[i].end());
  }
  return PointSet(rows.size(), dims, std::move(values));
}

bool Bounds::contains(std::span<const double> x) const noexcept {
  if (x.size() != lower.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < lower[j] || x[j] > upper[j]) return false;
  }
  return true;
}

void Bounds::validate() const {
  if (lower.empty() || lower.size() != upper.size()) {
    throw ConfigError("bounds need matching, non-empty lower and upper vectors");
  }
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (!std::isfinite(lower[j]) || !std::isfinite(upper[j])) {
      throw ConfigError("bounds must be finite (dimension " + std::to_string(j) + ")");
    }
    if (lower[j] > upper[j]) {
      throw ConfigError("bounds have lower > upper in dimension " + std::to_string(j));
    }
  }
}

}  // namespace swarmkm
