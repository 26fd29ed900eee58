#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "swarmkm/points.hpp"
#include "swarmkm/random.hpp"

namespace swarmkm::pso {

/// Objective to minimize. Must be safe to call concurrently when
/// `PsoConfig::threads > 1`.
using Objective = std::function<double(std::span<const double>)>;

struct PsoConfig {
  std::size_t population = 100;
  double c1 = 2.0;               // cognitive coefficient
  double c2 = 2.0;               // social coefficient
  double inertia_weight = 0.72;  // w
  std::size_t max_iter = 200;    // 0 runs initialization only
  double stall_tol = 1e-5;
  std::size_t stall_patience = 50;
  double vmax_fraction = 0.2;  // velocity limit as a fraction of box width
  std::uint64_t seed = 0;
  std::size_t threads = 1;  // concurrent objective evaluations per sweep

  void validate() const;
};

struct Particle {
  std::vector<double> position;
  std::vector<double> velocity;
  std::vector<double> pbest_position;
  double pbest_fitness = 0.0;
};

struct SwarmState {
  std::vector<Particle> particles;
  std::vector<double> gbest_position;
  double gbest_fitness = 0.0;
  std::size_t iteration = 0;
  std::vector<double> gbest_trace;  // entry 0 is the initial gbest
  std::size_t evaluations = 0;
  Rng rng;  // the swarm owns its random stream; a step is a function of state
};

/// Per-dimension acceleration draws for one sweep, particle-major (P x D).
struct StepDraws {
  std::vector<double> r1;
  std::vector<double> r2;
};

/// Places `population` particles uniformly in the box and gives them uniform
/// velocities within +-vmax. The first seeds.size() particles start at the
/// given positions instead.
SwarmState init_swarm(const Objective& objective, const Bounds& box, const PsoConfig& config,
                      std::span<const std::vector<double>> seeds = {});

/// Draws r1, r2 for one sweep from the swarm's stream.
StepDraws draw_step(SwarmState& state, std::size_t dims);

/// One synchronous sweep with freshly drawn coefficients.
SwarmState step(SwarmState state, const Objective& objective, const Bounds& box,
                const PsoConfig& config);

/// One synchronous sweep with caller-supplied coefficients.
SwarmState step_with(SwarmState state, const Objective& objective, const Bounds& box,
                     const PsoConfig& config, const StepDraws& draws);

struct PsoResult {
  std::vector<double> best_position;
  double best_fitness = 0.0;
  std::vector<double> trace;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool stalled = false;
};

/// Steps until max_iter sweeps or until gbest improved by less than
/// stall_tol over the last stall_patience sweeps.
PsoResult run(const Objective& objective, const Bounds& box, const PsoConfig& config,
              std::span<const std::vector<double>> seeds = {});

double sphere(std::span<const double> x);

/// `iteration,gbest_fitness` rows, one per trace entry.
void write_trace_csv(std::ostream& out, std::span<const double> trace);

}  // namespace swarmkm::pso
