// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef PITCHOPT_OPTIMIZER_HPP_
#define PITCHOPT_OPTIMIZER_HPP_

#include <vector>

#include "pitchopt/plant.hpp"

namespace pitchopt {

struct OptimizerConfig {
  double beta_init = 0.0;      // rad
  double pitch_step = 0.0;     // rad, initial step
  double step_decrement = 0.0; // rad, shrink per reversal (variable step)
  double min_step = 0.0;       // rad, lower bound on the step
  double thrust_cmd = 0.0;     // N
  int max_iterations = 0;      // bounds total plant calls (trace rows)
  double max_sim_seconds = 0.0;      // 0 disables the time budget
  int convergence_reversals = 0;     // stop after k reversals at min_step;
                                     // 0 keeps the pure budget behavior

  void validate() const;
};

struct TraceRow {
  int iteration = 0;
  double time = 0.0;      // cumulative settle time, s
  double beta = 0.0;      // rad
  double power = 0.0;     // W
  double thrust = 0.0;    // N
  int direction = 0;      // +1 / -1 (0 on the initial measurement)
  double step = 0.0;      // rad
  bool saturated = false;
};

struct OptimizationTrace {
  std::vector<TraceRow> rows;
  int plant_calls = 0;

  const TraceRow& back() const { return rows.back(); }
};

// Fixed-step hill climb on pitch angle at constant commanded thrust.
// Saturation forces direction = +1; otherwise the sign of the power
// improvement decides, with diff_power = 0 treated as worsening.
OptimizationTrace fixed_step_optimize(PlantPort& plant,
                                      const OptimizerConfig& cfg);

// Variable-step variant: a direction reversal shrinks the step by
// step_decrement until it reaches min_step.
OptimizationTrace variable_step_optimize(PlantPort& plant,
                                         const OptimizerConfig& cfg);

struct GridOptimum {
  double beta = 0.0;   // rad
  double power = 0.0;  // W
};

// Exhaustive evaluation over the beta grid; lowest-beta tie-breaking.
// Throws NowhereAchievableError if every point saturates.
GridOptimum grid_search_optimum(PlantPort& plant,
                                const std::vector<double>& beta_grid,
                                double thrust_cmd);

}  // namespace pitchopt

#endif  // PITCHOPT_OPTIMIZER_HPP_
