// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include <numbers>

#include <benchmark/benchmark.h>

#include "pitchopt/config.hpp"
#include "pitchopt/motor.hpp"
#include "pitchopt/plant.hpp"
#include "pitchopt/propeller.hpp"

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

void BM_ThrustAndTorque(benchmark::State& state) {
  const auto cfg = pitchopt::default_config();
  const pitchopt::OperatingPoint op{120.0, 9.0 * kDeg};
  const int stations = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pitchopt::thrust_and_torque(
        cfg.geometry, cfg.aero, cfg.env, op, stations));
  }
}
BENCHMARK(BM_ThrustAndTorque)->Arg(64)->Arg(128)->Arg(256);

void BM_SolveSpeedForThrust(benchmark::State& state) {
  const auto cfg = pitchopt::default_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pitchopt::solve_speed_for_thrust(
        cfg.geometry, cfg.aero, cfg.env, 9.0 * kDeg, 0.52));
  }
}
BENCHMARK(BM_SolveSpeedForThrust);

void BM_MotorStep(benchmark::State& state) {
  const auto cfg = pitchopt::default_config();
  const pitchopt::PropellerLoad load{cfg.geometry, cfg.aero, cfg.env, 128};
  pitchopt::MotorState s{100.0, 0.5};
  for (auto _ : state) {
    s = pitchopt::step(s, 6.0, 9.0 * kDeg, 1e-4, cfg.motor, load);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_MotorStep);

void BM_SimulatedSecond(benchmark::State& state) {
  const auto cfg = pitchopt::default_config();
  for (auto _ : state) {
    pitchopt::SimulatedPlant plant(cfg.geometry, cfg.aero, cfg.env, cfg.motor,
                                   cfg.gains, cfg.limits, cfg.sim);
    plant.simulate(9.0 * kDeg, 0.32, 1.0, [](const pitchopt::TelemetrySample&) {});
    benchmark::DoNotOptimize(plant.motor_state());
  }
}
BENCHMARK(BM_SimulatedSecond)->Unit(benchmark::kMillisecond);

}  // namespace

// The system libbenchmark_main.a ships stale LTO bytecode; provide the
// entry point here and link only the shared runtime library.
BENCHMARK_MAIN();
