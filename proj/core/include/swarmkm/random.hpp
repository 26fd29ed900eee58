#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace swarmkm {

using Rng = std::mt19937_64;

/// Named sub-streams derived from a single master seed. The numeric values
/// are part of the reproducibility contract and must never be renumbered.
enum class Stream : std::uint64_t {
  kData = 0x01,    // synthetic data generation
  kInit = 0x02,    // random / k-means++ initialization
  kPso = 0x03,     // swarm positions, velocities and draws
  kSample = 0x04,  // fitness subset
  kForgy = 0x05,   // Forgy candidates injected into the swarm
  kRepeat = 0x06,  // per-repeat seeds inside a bench
};

/// SplitMix64 finalizer over (master, stream, index). Distinct inputs map to
/// well-mixed, effectively independent 64-bit seeds.
std::uint64_t derive_seed(std::uint64_t master, Stream stream, std::uint64_t index = 0);

/// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
double uniform01(Rng& rng);

/// Uniform double in [lo, hi).
double uniform_real(Rng& rng, double lo, double hi);

/// Uniform integer in [0, n), unbiased (rejection sampling). n must be > 0.
std::size_t uniform_index(Rng& rng, std::size_t n);

}  // namespace swarmkm
