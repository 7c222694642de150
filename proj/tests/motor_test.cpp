// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "pitchopt/motor.hpp"

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "pitchopt/config.hpp"
#include "pitchopt/errors.hpp"

using namespace pitchopt;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;

MotorParams ref_motor() { return default_config().motor; }

PropellerLoad ref_load() {
  const RunConfig cfg = default_config();
  return {cfg.geometry, cfg.aero, cfg.env, 128};
}
}  // namespace

TEST_CASE("derivatives match the ODE right-hand sides") {
  const MotorParams m = ref_motor();
  SUBCASE("equilibrium at rest") {
    const auto d = derivatives({0.0, 0.0}, 0.0, 0.0, m);
    CHECK(d.domega_dt == 0.0);
    CHECK(d.dcurrent_dt == 0.0);
  }
  SUBCASE("voltage step only excites the inductor") {
    MotorParams p = m;
    p.inductance = 0.01;
    const auto d = derivatives({0.0, 0.0}, 5.0, 0.0, p);
    CHECK(d.domega_dt == 0.0);
    CHECK(d.dcurrent_dt == doctest::Approx(500.0).epsilon(1e-12));
  }
  SUBCASE("algebraic steady state has vanishing derivatives") {
    // Pick omega and solve for the (i, v, Q) that balances both rows.
    const double omega = 300.0;
    const double q_load = 4e-3;
    const double i = (m.viscous_b1 * omega + q_load) / m.emf_k;
    const double v = m.resistance * i + m.emf_k * omega;
    const auto d = derivatives({omega, i}, v, q_load, m);
    CHECK(std::abs(d.domega_dt) <= 1e-12 * omega);
    CHECK(std::abs(d.dcurrent_dt) <= 1e-12 * std::max(1.0, i));
  }
}

TEST_CASE("steady_state_supply inverts the equilibrium") {
  const MotorParams m = ref_motor();
  const auto [v, i] = steady_state_supply(250.0, 3e-3, m);
  const auto d = derivatives({250.0, i}, v, 3e-3, m);
  CHECK(std::abs(d.domega_dt) <= 1e-9);
  CHECK(std::abs(d.dcurrent_dt) <= 1e-9);
}

TEST_CASE("electrical power") {
  CHECK(electrical_power(0.0, 3.7) == 0.0);
  CHECK(electrical_power(12.0, 1.0) == 12.0);
}

TEST_CASE("step holds the rest fixed point") {
  const MotorParams m = ref_motor();
  const PropellerLoad load = ref_load();
  MotorState s{0.0, 0.0};
  for (int i = 0; i < 100; ++i) s = step(s, 0.0, 8.0 * kDeg, 1e-4, m, load);
  CHECK(s.omega == 0.0);
  CHECK(s.current == 0.0);
}

TEST_CASE("step rejects non-finite evolution") {
  MotorParams bad = ref_motor();
  bad.inertia = 1e-30;  // absurd stiffness blows up RK4 at this dt
  const PropellerLoad load = ref_load();
  MotorState s{0.0, 0.0};
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 1000; ++i)
          s = step(s, 12.0, 8.0 * kDeg, 1e-2, bad, load);
      }(),
      DivergedError);
}

TEST_CASE("RK4 error shrinks ~16x when dt halves") {
  const MotorParams m = ref_motor();
  const PropellerLoad load = ref_load();
  const double beta = 8.0 * kDeg;
  const double t_end = 0.2;

  auto integrate = [&](double dt) {
    MotorState s{0.0, 0.0};
    const long steps = std::lround(t_end / dt);
    for (long i = 0; i < steps; ++i) s = step(s, 6.0, beta, dt, m, load);
    return s;
  };

  const MotorState ref = integrate(1e-6);
  auto err = [&](const MotorState& s) {
    return std::hypot(s.omega - ref.omega, 100.0 * (s.current - ref.current));
  };
  const double e1 = err(integrate(1e-3));
  const double e2 = err(integrate(5e-4));
  const double e3 = err(integrate(2.5e-4));
  const double order12 = std::log2(e1 / e2);
  const double order23 = std::log2(e2 / e3);
  CHECK(order12 >= 3.5);
  CHECK(order23 >= 3.5);
}

TEST_CASE("long run reaches the power-balance equilibrium") {
  const MotorParams m = ref_motor();
  const PropellerLoad load = ref_load();
  const double beta = 8.0 * kDeg;
  const double v = 6.0;
  MotorState s{0.0, 0.0};
  for (int i = 0; i < 50000; ++i) s = step(s, v, beta, 1e-4, m, load);

  // Settled: derivatives close to zero.
  const double q = load.loads(s.omega, beta).torque;
  const auto d = derivatives(s, v, q, m);
  REQUIRE(std::abs(d.domega_dt) <= 1e-6 * std::max(1.0, s.omega));
  REQUIRE(std::abs(d.dcurrent_dt) <= 1e-6 * std::max(1.0, s.current));

  // v i = R i^2 + B1 omega^2 + Q omega (k_b cancels at equilibrium).
  const double input = v * s.current;
  const double dissipated = m.resistance * s.current * s.current +
                            m.viscous_b1 * s.omega * s.omega + q * s.omega;
  CHECK(std::abs(input - dissipated) <= 1e-6 * input);
}

TEST_CASE("determinism: identical inputs give bit-identical trajectories") {
  const MotorParams m = ref_motor();
  const PropellerLoad load = ref_load();
  MotorState a{0.0, 0.0}, b{0.0, 0.0};
  for (int i = 0; i < 2000; ++i) {
    a = step(a, 7.4, 6.0 * kDeg, 1e-4, m, load);
    b = step(b, 7.4, 6.0 * kDeg, 1e-4, m, load);
  }
  CHECK(a.omega == b.omega);
  CHECK(a.current == b.current);
}

TEST_CASE("input voltage is clamped to the supply limit") {
  const MotorParams m = ref_motor();
  const PropellerLoad load = ref_load();
  MotorState hi{0.0, 0.0}, clamped{0.0, 0.0};
  for (int i = 0; i < 1000; ++i) {
    hi = step(hi, 100.0, 6.0 * kDeg, 1e-4, m, load);
    clamped = step(clamped, m.voltage_limit, 6.0 * kDeg, 1e-4, m, load);
  }
  CHECK(hi.omega == clamped.omega);
  CHECK(hi.current == clamped.current);
}

TEST_CASE("motor parameter validation") {
  MotorParams m = ref_motor();
  m.resistance = 0.0;
  CHECK_THROWS_AS(m.validate(), ConfigError);
  m = ref_motor();
  m.inertia = -1.0;
  CHECK_THROWS_AS(m.validate(), ConfigError);
}
