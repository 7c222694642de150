// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "pitchopt/motor.hpp"

#include <algorithm>
#include <cmath>

#include "pitchopt/errors.hpp"

namespace pitchopt {

void MotorParams::validate() const {
  if (!(inertia > 0.0)) throw ConfigError("motor inertia must be > 0");
  if (!(emf_k > 0.0)) throw ConfigError("emf constant must be > 0");
  if (!(viscous_b1 >= 0.0)) throw ConfigError("viscous friction must be >= 0");
  if (!(resistance > 0.0)) throw ConfigError("resistance must be > 0");
  if (!(inductance > 0.0)) throw ConfigError("inductance must be > 0");
  if (!(voltage_limit > 0.0)) throw ConfigError("voltage limit must be > 0");
}

MotorDerivatives derivatives(const MotorState& state, double v_in,
                             double load_torque, const MotorParams& params) {
  const double domega = (params.emf_k * state.current -
                         params.viscous_b1 * state.omega - load_torque) /
                        params.inertia;
  const double dcurrent = (-params.resistance * state.current -
                           params.emf_k * state.omega + v_in) /
                          params.inductance;
  return {domega, dcurrent};
}

MotorState step(const MotorState& state, double v_in, double beta, double dt,
                const MotorParams& params, const PropellerLoad& load) {
  const double v = std::clamp(v_in, 0.0, params.voltage_limit);

  auto eval = [&](const MotorState& s) {
    return derivatives(s, v, load.loads(s.omega, beta).torque, params);
  };

  const MotorDerivatives k1 = eval(state);
  const MotorDerivatives k2 = eval({state.omega + 0.5 * dt * k1.domega_dt,
                                    state.current + 0.5 * dt * k1.dcurrent_dt});
  const MotorDerivatives k3 = eval({state.omega + 0.5 * dt * k2.domega_dt,
                                    state.current + 0.5 * dt * k2.dcurrent_dt});
  const MotorDerivatives k4 = eval({state.omega + dt * k3.domega_dt,
                                    state.current + dt * k3.dcurrent_dt});

  MotorState next;
  next.omega = state.omega + dt / 6.0 *
                                 (k1.domega_dt + 2.0 * k2.domega_dt +
                                  2.0 * k3.domega_dt + k4.domega_dt);
  next.current = state.current + dt / 6.0 *
                                     (k1.dcurrent_dt + 2.0 * k2.dcurrent_dt +
                                      2.0 * k3.dcurrent_dt + k4.dcurrent_dt);
  if (!std::isfinite(next.omega) || !std::isfinite(next.current))
    throw DivergedError("non-finite motor state");
  return next;
}

std::pair<double, double> steady_state_supply(double omega, double torque,
                                              const MotorParams& params) {
  const double current = (params.viscous_b1 * omega + torque) / params.emf_k;
  const double voltage = params.resistance * current + params.emf_k * omega;
  return {voltage, current};
}

}  // namespace pitchopt
