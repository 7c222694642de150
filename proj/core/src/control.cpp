// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "pitchopt/control.hpp"

#include "pitchopt/errors.hpp"

namespace pitchopt {

void PidGains::validate() const {
  if (!(kp >= 0.0 && ki >= 0.0 && kd >= 0.0))
    throw ConfigError("PID gains must be >= 0");
  if (!(integral_limit > 0.0))
    throw ConfigError("integral limit must be > 0");
}

void RampCommand::validate() const {
  if (!(target >= 0.0)) throw ConfigError("ramp target must be >= 0");
  if (!(ramp_duration > 0.0)) throw ConfigError("ramp duration must be > 0");
}

double ramp_value(const RampCommand& cmd, double t) {
  return std::min(cmd.target, cmd.target * t / cmd.ramp_duration);
}

double pid_step(const PidGains& gains, PidState& state, double error,
                double measurement, double dt, double output_limit) {
  state.integral = std::clamp(state.integral + gains.ki * error * dt,
                              -gains.integral_limit, gains.integral_limit);
  double derivative = 0.0;
  if (state.primed && gains.kd > 0.0)
    derivative = -(measurement - state.last_measurement) / dt;
  state.last_measurement = measurement;
  state.primed = true;
  const double out = gains.kp * error + state.integral + gains.kd * derivative;
  return std::clamp(out, 0.0, output_limit);
}

}  // namespace pitchopt
