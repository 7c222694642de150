// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "pitchopt/plant.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "pitchopt/config.hpp"
#include "pitchopt/errors.hpp"

using namespace pitchopt;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;

SimulatedPlant fresh_plant(const RunConfig& cfg) {
  return SimulatedPlant(cfg.geometry, cfg.aero, cfg.env, cfg.motor, cfg.gains,
                        cfg.limits, cfg.sim);
}
}  // namespace

TEST_CASE("idle plant: zero thrust command") {
  const RunConfig cfg = default_config();
  SimulatedPlant plant = fresh_plant(cfg);
  const SettledMeasurement m = plant.set_propeller(9.0 * kDeg, 0.0);
  CHECK(m.power == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(m.thrust == doctest::Approx(0.0).epsilon(1e-9));
  CHECK_FALSE(m.saturated);
}

TEST_CASE("achievable command settles inside the tolerance band") {
  const RunConfig cfg = default_config();
  SimulatedPlant plant = fresh_plant(cfg);
  const SettledMeasurement m = plant.set_propeller(9.0 * kDeg, 0.52);
  CHECK_FALSE(m.saturated);
  CHECK(std::abs(m.thrust - 0.52) <=
        cfg.limits.settle_tolerance * 0.52 + 1e-12);
  CHECK(m.power > 0.0);
  CHECK(m.settle_time <= cfg.limits.timeout);
}

TEST_CASE("low pitch saturates the supply before reaching the command") {
  const RunConfig cfg = default_config();
  SimulatedPlant plant = fresh_plant(cfg);
  const SettledMeasurement m = plant.set_propeller(0.59 * kDeg, 0.52);
  CHECK(m.saturated);
  CHECK(m.thrust < 0.52);
  // Power pinned at the ceiling while the limit binds.
  CHECK(m.power == doctest::Approx(cfg.limits.power_ceiling).epsilon(0.02));
}

TEST_CASE("beta out of range is rejected") {
  const RunConfig cfg = default_config();
  SimulatedPlant plant = fresh_plant(cfg);
  CHECK_THROWS_AS(plant.set_propeller(40.0 * kDeg, 0.3), BetaOutOfRangeError);
  CHECK_THROWS_AS(plant.set_propeller(-10.0 * kDeg, 0.3), BetaOutOfRangeError);
}

TEST_CASE("plant state persists across calls") {
  const RunConfig cfg = default_config();
  SimulatedPlant plant = fresh_plant(cfg);
  plant.set_propeller(9.0 * kDeg, 0.52);
  const double omega_after = plant.motor_state().omega;
  CHECK(omega_after > 0.0);
  // The next request starts from the spinning state, not from rest.
  const SettledMeasurement m2 = plant.set_propeller(10.0 * kDeg, 0.52);
  CHECK_FALSE(m2.saturated);
  CHECK(plant.sim_time() > 0.0);
}

TEST_CASE("settled power matches the steady-state model within 5%") {
  const RunConfig cfg = default_config();
  ModelPlant model(cfg.geometry, cfg.aero, cfg.env, cfg.motor, cfg.limits);
  SimulatedPlant plant = fresh_plant(cfg);
  for (double beta_deg : {6.0, 9.0, 14.0}) {
    const SettledMeasurement sim = plant.set_propeller(beta_deg * kDeg, 0.52);
    const SettledMeasurement ref = model.set_propeller(beta_deg * kDeg, 0.52);
    REQUIRE_FALSE(sim.saturated);
    CHECK(std::abs(sim.power - ref.power) <= 0.05 * ref.power);
  }
}

TEST_CASE("deterministic given seed and config") {
  const RunConfig cfg = default_config();
  RunConfig noisy = cfg;
  noisy.sim.noise_amplitude = 0.005;
  // The settle band must sit above the noise floor or the loop never
  // reads as settled.
  noisy.limits.settle_tolerance = 0.02;
  noisy.limits.settle_band_floor = 0.005;
  SimulatedPlant a = fresh_plant(noisy);
  SimulatedPlant b = fresh_plant(noisy);
  const SettledMeasurement ma = a.set_propeller(9.0 * kDeg, 0.52);
  const SettledMeasurement mb = b.set_propeller(9.0 * kDeg, 0.52);
  CHECK(ma.power == mb.power);
  CHECK(ma.thrust == mb.thrust);
  CHECK(ma.settle_time == mb.settle_time);
}

TEST_CASE("noisy measurements still settle") {
  RunConfig cfg = default_config();
  cfg.sim.noise_amplitude = 0.003;
  cfg.limits.settle_tolerance = 0.02;
  cfg.limits.settle_band_floor = 0.005;
  SimulatedPlant plant = fresh_plant(cfg);
  const SettledMeasurement m = plant.set_propeller(9.0 * kDeg, 0.52);
  CHECK_FALSE(m.saturated);
  CHECK(std::abs(m.thrust - 0.52) <= 0.05 * 0.52);
}

TEST_CASE("telemetry stream covers the run at the sim step") {
  const RunConfig cfg = default_config();
  SimulatedPlant plant = fresh_plant(cfg);
  std::vector<TelemetrySample> samples;
  plant.simulate(9.0 * kDeg, 0.32, 1.0,
                 [&](const TelemetrySample& s) { samples.push_back(s); });
  CHECK(samples.size() == doctest::Approx(1.0 / cfg.sim.dt).epsilon(0.01));
  // Command ramps from zero and time increases monotonically.
  CHECK(samples.front().thrust_cmd == doctest::Approx(0.0).epsilon(1e-6));
  for (size_t i = 1; i < samples.size(); ++i)
    CHECK(samples[i].t > samples[i - 1].t);
}

TEST_CASE("model plant reports unreachable commands as saturated") {
  const RunConfig cfg = default_config();
  ModelPlant model(cfg.geometry, cfg.aero, cfg.env, cfg.motor, cfg.limits);
  const SettledMeasurement m = model.set_propeller(0.59 * kDeg, 0.52);
  CHECK(m.saturated);
  CHECK(m.thrust < 0.52);
  const SettledMeasurement ok = model.set_propeller(9.0 * kDeg, 0.52);
  CHECK_FALSE(ok.saturated);
  CHECK(ok.thrust == doctest::Approx(0.52));
}

TEST_CASE("plant limits validation") {
  PlantLimits lim;
  lim.settle_tolerance = 1.5;
  CHECK_THROWS_AS(lim.validate(), ConfigError);
  lim = PlantLimits{};
  lim.beta_min = lim.beta_max;
  CHECK_THROWS_AS(lim.validate(), ConfigError);
}
