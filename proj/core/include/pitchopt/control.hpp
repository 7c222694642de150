// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef PITCHOPT_CONTROL_HPP_
#define PITCHOPT_CONTROL_HPP_

#include <algorithm>

namespace pitchopt {

// Thrust-loop PID gains: volts per newton of error and its
// integral/derivative.
struct PidGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
  double integral_limit = 1.0;  // anti-windup bound on the integral term (V)

  void validate() const;
};

// Positional PID memory.
struct PidState {
  double integral = 0.0;          // integrated error * ki (V)
  double last_measurement = 0.0;  // for derivative-on-measurement
  bool primed = false;            // first call skips the derivative term
};

// Saturated ramp: rises linearly to target over ramp_duration, then
// holds.
struct RampCommand {
  double target = 0.0;         // N
  double ramp_duration = 1.6;  // s

  void validate() const;
};

double ramp_value(const RampCommand& cmd, double t);

// One positional PID update with clamped integral and
// derivative-on-measurement. Output clamped to [0, output_limit].
double pid_step(const PidGains& gains, PidState& state, double error,
                double measurement, double dt, double output_limit);

// Affine sensor/actuator map y = scale * x + offset, invertible.
struct AffineMap {
  double scale = 1.0;
  double offset = 0.0;

  double apply(double x) const { return scale * x + offset; }
  double invert(double y) const { return (y - offset) / scale; }
};

// Bench calibration maps: analog counts/volts to engineering units.
struct Calibration {
  AffineMap supply_voltage{0.0202, -0.0237};            // v_an -> V
  AffineMap motor_current{4.1532, -1826.67};            // i_an -> mA
  AffineMap load_cell{9.81 * 4.11 / 1000.0,
                      -9.81 * 49.36 / 1000.0};          // v_out -> N
  AffineMap servo_pitch{0.59, -0.59 * 135.0};           // v_servo -> deg
};

}  // namespace pitchopt

#endif  // PITCHOPT_CONTROL_HPP_
