// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "pitchopt/control.hpp"

#include <cmath>

#include <doctest.h>

#include "pitchopt/errors.hpp"

using namespace pitchopt;

TEST_CASE("ramp value") {
  RampCommand cmd{0.32, 1.6};
  CHECK(ramp_value(cmd, 0.0) == 0.0);
  CHECK(ramp_value(cmd, 0.8) == doctest::Approx(0.16));
  CHECK(ramp_value(cmd, 1.6) == doctest::Approx(0.32));
  CHECK(ramp_value(cmd, 100.0) == doctest::Approx(0.32));
}

TEST_CASE("ramp is monotone and saturates exactly at the target") {
  RampCommand cmd{0.52, 2.5};
  double prev = -1.0;
  for (double t = 0.0; t <= 10.0; t += 0.05) {
    const double v = ramp_value(cmd, t);
    CHECK(v >= prev);
    CHECK(v <= cmd.target);
    prev = v;
  }
  CHECK(ramp_value(cmd, cmd.ramp_duration) == cmd.target);
}

TEST_CASE("pid: proportional only") {
  PidGains g{3.0, 0.0, 0.0, 1.0};
  PidState s;
  CHECK(pid_step(g, s, 0.5, 0.0, 1e-3, 12.0) == doctest::Approx(1.5));
  CHECK(pid_step(g, s, -0.5, 0.0, 1e-3, 12.0) == 0.0);  // clamped at zero
  CHECK(pid_step(g, s, 100.0, 0.0, 1e-3, 12.0) == 12.0);  // clamped at limit
}

TEST_CASE("pid: zero error converges to the integral term") {
  PidGains g{3.0, 2.0, 0.5, 10.0};
  PidState s;
  // Build up some integral, then feed zero error.
  for (int i = 0; i < 100; ++i) pid_step(g, s, 0.4, 0.1, 1e-2, 12.0);
  double out = 0.0;
  for (int i = 0; i < 50; ++i) out = pid_step(g, s, 0.0, 0.1, 1e-2, 12.0);
  CHECK(out == doctest::Approx(s.integral).epsilon(1e-12));
}

TEST_CASE("pid integral respects the anti-windup bound") {
  PidGains g{0.0, 50.0, 0.0, 2.0};
  PidState s;
  for (int i = 0; i < 10000; ++i) pid_step(g, s, 1.0, 0.0, 1e-2, 12.0);
  CHECK(s.integral <= g.integral_limit);
  for (int i = 0; i < 20000; ++i) pid_step(g, s, -1.0, 0.0, 1e-2, 12.0);
  CHECK(s.integral >= -g.integral_limit);
}

TEST_CASE("pid output always within [0, limit]") {
  PidGains g{8.0, 5.0, 0.2, 6.0};
  PidState s;
  for (int i = 0; i < 1000; ++i) {
    const double e = std::sin(i * 0.1) * 50.0;
    const double out = pid_step(g, s, e, -e, 1e-3, 12.0);
    CHECK(out >= 0.0);
    CHECK(out <= 12.0);
  }
}

TEST_CASE("gain validation") {
  CHECK_THROWS_AS(PidGains({-1.0, 0.0, 0.0, 1.0}).validate(), ConfigError);
  CHECK_THROWS_AS(PidGains({1.0, 0.0, 0.0, 0.0}).validate(), ConfigError);
  CHECK_THROWS_AS(RampCommand({0.3, 0.0}).validate(), ConfigError);
}

TEST_CASE("calibration constants reproduce the bench relations") {
  Calibration cal;
  // v = 0.0202 v_an - 0.0237
  CHECK(cal.supply_voltage.apply(500.0) ==
        doctest::Approx(0.0202 * 500.0 - 0.0237).epsilon(1e-12));
  // i = 4.1532 i_an - 1826.67 (mA)
  CHECK(cal.motor_current.apply(600.0) ==
        doctest::Approx(4.1532 * 600.0 - 1826.67).epsilon(1e-12));
  // T = 9.81 (4.11 v_out - 49.36) / 1000, zero crossing at 49.36 / 4.11
  CHECK(cal.load_cell.apply(49.36 / 4.11) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cal.load_cell.apply(20.0) ==
        doctest::Approx(9.81 * (4.11 * 20.0 - 49.36) / 1000.0).epsilon(1e-12));
  // beta = 0.59 (v_servo - 135) deg
  CHECK(cal.servo_pitch.apply(135.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cal.servo_pitch.apply(150.0) ==
        doctest::Approx(0.59 * 15.0).epsilon(1e-12));
}

TEST_CASE("calibration maps round-trip") {
  Calibration cal;
  for (const AffineMap& map : {cal.supply_voltage, cal.motor_current,
                               cal.load_cell, cal.servo_pitch}) {
    for (double x : {-100.0, 0.0, 42.0, 987.65}) {
      CHECK(map.invert(map.apply(x)) ==
            doctest::Approx(x).epsilon(1e-12));
      CHECK(map.apply(map.invert(x)) ==
            doctest::Approx(x).epsilon(1e-12));
    }
  }
}
