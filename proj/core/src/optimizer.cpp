// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "pitchopt/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "pitchopt/errors.hpp"

namespace pitchopt {

void OptimizerConfig::validate() const {
  if (!(pitch_step > 0.0)) throw ConfigError("pitch step must be > 0");
  if (!(min_step > 0.0)) throw ConfigError("min step must be > 0");
  if (!(thrust_cmd >= 0.0)) throw ConfigError("thrust command must be >= 0");
  if (max_iterations <= 0 && max_sim_seconds <= 0.0)
    throw ConfigError("either an iteration or a time budget is required");
  if (step_decrement < 0.0) throw ConfigError("step decrement must be >= 0");
}

namespace {

OptimizationTrace hill_climb(PlantPort& plant, const OptimizerConfig& cfg,
                             bool variable_step) {
  cfg.validate();
  const auto [beta_lo, beta_hi] = plant.beta_range();

  OptimizationTrace trace;
  double beta = std::clamp(cfg.beta_init, beta_lo, beta_hi);
  double step = cfg.pitch_step;
  double elapsed = 0.0;

  SettledMeasurement m = plant.set_propeller(beta, cfg.thrust_cmd);
  ++trace.plant_calls;
  elapsed += m.settle_time;
  trace.rows.push_back(
      {0, elapsed, beta, m.power, m.thrust, 0, step, m.saturated});

  double prev_power = m.power;
  double diff_power = 1.0;
  int prev_direction = 1;
  bool clamped_last = false;
  int reversals_at_min = 0;

  auto budget_left = [&] {
    if (cfg.max_iterations > 0 &&
        static_cast<int>(trace.rows.size()) >= cfg.max_iterations)
      return false;
    if (cfg.max_sim_seconds > 0.0 && elapsed >= cfg.max_sim_seconds)
      return false;
    return true;
  };

  for (int iter = 1; budget_left(); ++iter) {
    int direction;
    if (m.saturated) {
      direction = 1;
    } else if (diff_power > 0.0) {
      direction = 1;
    } else {
      direction = -1;
    }

    // Clamping at a range end counts as a reversal so the variable
    // step can still shrink at the boundary.
    const bool reversed =
        prev_direction * direction == -1 || (variable_step && clamped_last);
    if (variable_step && reversed && step > cfg.min_step) {
      step = std::max(cfg.min_step, step - cfg.step_decrement);
      // Repeated subtraction can leave the step a few ulp above the
      // floor; snap so the convergence counter sees the minimum step.
      if (step <= cfg.min_step * (1.0 + 1e-9)) step = cfg.min_step;
    }
    if (reversed && step <= cfg.min_step)
      ++reversals_at_min;
    else if (!reversed)
      reversals_at_min = 0;
    prev_direction = direction;

    const double beta_unclamped = beta + direction * step;
    beta = std::clamp(beta_unclamped, beta_lo, beta_hi);
    clamped_last = beta != beta_unclamped;

    m = plant.set_propeller(beta, cfg.thrust_cmd);
    ++trace.plant_calls;
    elapsed += m.settle_time;
    const double next_power = m.power;
    diff_power = prev_power - next_power;
    prev_power = next_power;

    trace.rows.push_back(
        {iter, elapsed, beta, m.power, m.thrust, direction, step,
         m.saturated});

    if (cfg.convergence_reversals > 0 &&
        reversals_at_min >= cfg.convergence_reversals)
      break;
  }
  return trace;
}

}  // namespace

OptimizationTrace fixed_step_optimize(PlantPort& plant,
                                      const OptimizerConfig& cfg) {
  return hill_climb(plant, cfg, /*variable_step=*/false);
}

OptimizationTrace variable_step_optimize(PlantPort& plant,
                                         const OptimizerConfig& cfg) {
  return hill_climb(plant, cfg, /*variable_step=*/true);
}

GridOptimum grid_search_optimum(PlantPort& plant,
                                const std::vector<double>& beta_grid,
                                double thrust_cmd) {
  bool found = false;
  GridOptimum best;
  for (double beta : beta_grid) {
    const SettledMeasurement m = plant.set_propeller(beta, thrust_cmd);
    if (m.saturated) continue;
    if (!found || m.power < best.power) {
      best = {beta, m.power};
      found = true;
    }
  }
  if (!found)
    throw NowhereAchievableError(
        "commanded thrust saturates at every grid point");
  return best;
}

}  // namespace pitchopt
