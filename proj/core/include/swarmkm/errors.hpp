#pragma once

#include <stdexcept>
#include <string>

namespace swarmkm {

// Bad input data: unreadable files, malformed CSV, non-finite values.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Violated preconditions on parameters: dimension mismatches, k > n,
// out-of-range tunables.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace swarmkm
