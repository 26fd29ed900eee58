#include "swarmkm/pso.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <string>
#include <thread>

#include "swarmkm/errors.hpp"

namespace swarmkm::pso {
namespace {

void check_box(const Bounds& box) {
  box.validate();
  for (std::size_t j = 0; j < box.dims(); ++j) {
    if (!(box.width(j) > 0.0)) {
      throw ConfigError("search box has zero width in dimension " + std::to_string(j));
    }
  }
}

std::vector<double> velocity_limits(const Bounds& box, const PsoConfig& config) {
  std::vector<double> vmax(box.dims());
  for (std::size_t j = 0; j < box.dims(); ++j) vmax[j] = config.vmax_fraction * box.width(j);
  return vmax;
}

// Evaluates the objective at every particle's position. Work is split by
// index only, so results do not depend on the thread count.
std::vector<double> evaluate(const Objective& objective, const std::vector<Particle>& particles,
                             std::size_t threads) {
  std::vector<double> values(particles.size());
  const std::size_t workers = std::min(threads, particles.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < particles.size(); ++i) values[i] = objective(particles[i].position);
    return values;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < particles.size(); i += workers) {
            values[i] = objective(particles[i].position);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return values;
}

void refresh_gbest(SwarmState& state) {
  for (const auto& particle : state.particles) {
    if (particle.pbest_fitness < state.gbest_fitness) {
      state.gbest_fitness = particle.pbest_fitness;
      state.gbest_position = particle.pbest_position;
    }
  }
}

}  // namespace

void PsoConfig::validate() const {
  if (population < 2) throw ConfigError("swarm population must be at least 2");
  if (!(c1 >= 0.0) || !(c2 >= 0.0) || !std::isfinite(c1) || !std::isfinite(c2)) {
    throw ConfigError("c1 and c2 must be finite and >= 0");
  }
  if (!(inertia_weight > 0.0 && inertia_weight < 1.0)) {
    throw ConfigError("inertia weight must lie in (0, 1)");
  }
  if (!(stall_tol >= 0.0) || !std::isfinite(stall_tol)) throw ConfigError("stall tolerance must be >= 0");
  if (stall_patience == 0) throw ConfigError("stall patience must be at least 1");
  if (!(vmax_fraction > 0.0 && vmax_fraction <= 1.0)) {
    throw ConfigError("vmax fraction must lie in (0, 1]");
  }
  if (threads == 0) throw ConfigError("thread count must be at least 1");
}

SwarmState init_swarm(const Objective& objective, const Bounds& box, const PsoConfig& config,
                      std::span<const std::vector<double>> seeds) {
  config.validate();
  check_box(box);
  const std::size_t dims = box.dims();
  if (seeds.size() > config.population) {
    throw ConfigError("more seed positions than particles");
  }
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    if (seeds[s].size() != dims) {
      throw ConfigError("seed position " + std::to_string(s) + " has the wrong dimensionality");
    }
    if (!box.contains(seeds[s])) {
      throw ConfigError("seed position " + std::to_string(s) + " lies outside the search box");
    }
  }

  SwarmState state;
  state.rng.seed(config.seed);
  const auto vmax = velocity_limits(box, config);
  state.particles.resize(config.population);
  for (std::size_t i = 0; i < config.population; ++i) {
    auto& particle = state.particles[i];
    particle.position.resize(dims);
    particle.velocity.resize(dims);
    // Positions are always drawn so the stream does not depend on seeding.
    for (std::size_t j = 0; j < dims; ++j) {
      particle.position[j] = uniform_real(state.rng, box.lower[j], box.upper[j]);
    }
    for (std::size_t j = 0; j < dims; ++j) {
      particle.velocity[j] = uniform_real(state.rng, -vmax[j], vmax[j]);
    }
    if (i < seeds.size()) particle.position = seeds[i];
  }

  const auto values = evaluate(objective, state.particles, config.threads);
  state.evaluations = values.size();
  for (std::size_t i = 0; i < config.population; ++i) {
    state.particles[i].pbest_position = state.particles[i].position;
    state.particles[i].pbest_fitness = values[i];
  }
  state.gbest_position = state.particles[0].pbest_position;
  state.gbest_fitness = state.particles[0].pbest_fitness;
  refresh_gbest(state);
  state.gbest_trace.push_back(state.gbest_fitness);
  return state;
}

StepDraws draw_step(SwarmState& state, std::size_t dims) {
  const std::size_t count = state.particles.size() * dims;
  StepDraws draws;
  draws.r1.resize(count);
  draws.r2.resize(count);
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    for (std::size_t j = 0; j < dims; ++j) draws.r1[i * dims + j] = uniform01(state.rng);
    for (std::size_t j = 0; j < dims; ++j) draws.r2[i * dims + j] = uniform01(state.rng);
  }
  return draws;
}

SwarmState step(SwarmState state, const Objective& objective, const Bounds& box,
                const PsoConfig& config) {
  const StepDraws draws = draw_step(state, box.dims());
  return step_with(std::move(state), objective, box, config, draws);
}

SwarmState step_with(SwarmState state, const Objective& objective, const Bounds& box,
                     const PsoConfig& config, const StepDraws& draws) {
  const std::size_t dims = box.dims();
  const std::size_t count = state.particles.size() * dims;
  if (draws.r1.size() != count || draws.r2.size() != count) {
    throw ConfigError("step draws do not match swarm size x dimensions");
  }
  const auto vmax = velocity_limits(box, config);
  const auto& gbest = state.gbest_position;

  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    auto& p = state.particles[i];
    for (std::size_t j = 0; j < dims; ++j) {
      const double r1 = draws.r1[i * dims + j];
      const double r2 = draws.r2[i * dims + j];
      double v = config.inertia_weight * p.velocity[j] +
                 config.c1 * r1 * (p.pbest_position[j] - p.position[j]) +
                 config.c2 * r2 * (gbest[j] - p.position[j]);
      v = std::clamp(v, -vmax[j], vmax[j]);
      double x = p.position[j] + v;
      if (x < box.lower[j]) {
        x = box.lower[j];
        v = 0.0;
      } else if (x > box.upper[j]) {
        x = box.upper[j];
        v = 0.0;
      }
      p.position[j] = x;
      p.velocity[j] = v;
    }
  }

  const auto values = evaluate(objective, state.particles, config.threads);
  state.evaluations += values.size();
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    auto& p = state.particles[i];
    if (values[i] < p.pbest_fitness) {
      p.pbest_fitness = values[i];
      p.pbest_position = p.position;
    }
  }
  refresh_gbest(state);
  ++state.iteration;
  state.gbest_trace.push_back(state.gbest_fitness);
  return state;
}

PsoResult run(const Objective& objective, const Bounds& box, const PsoConfig& config,
              std::span<const std::vector<double>> seeds) {
  SwarmState state = init_swarm(objective, box, config, seeds);
  PsoResult result;
  while (state.iteration < config.max_iter) {
    state = step(std::move(state), objective, box, config);
    const auto& trace = state.gbest_trace;
    if (state.iteration >= config.stall_patience &&
        trace[state.iteration - config.stall_patience] - trace[state.iteration] < config.stall_tol) {
      result.stalled = true;
      break;
    }
  }
  result.best_position = std::move(state.gbest_position);
  result.best_fitness = state.gbest_fitness;
  result.trace = std::move(state.gbest_trace);
  result.iterations = state.iteration;
  result.evaluations = state.evaluations;
  return result;
}

double sphere(std::span<const double> x) {
  double sum = 0.0;
  for (const double v : x) sum += v * v;
  return sum;
}

void write_trace_csv(std::ostream& out, std::span<const double> trace) {
  const auto precision = out.precision(17);
  out << "iteration,gbest_fitness\n";
  for (std::size_t i = 0; i < trace.size(); ++i) out << i << ',' << trace[i] << '\n';
  out.precision(precision);
}

}  // namespace swarmkm::pso
