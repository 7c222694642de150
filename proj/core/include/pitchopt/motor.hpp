// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef PITCHOPT_MOTOR_HPP_
#define PITCHOPT_MOTOR_HPP_

#include <utility>

#include "pitchopt/propeller.hpp"

namespace pitchopt {

// Electromechanical constants of the armature-controlled DC motor.
struct MotorParams {
  double inertia = 0.0;        // kg*m^2
  double emf_k = 0.0;          // V*s/rad (also the torque constant, N*m/A)
  double viscous_b1 = 0.0;     // N*m*s/rad
  double resistance = 0.0;     // Ohm
  double inductance = 0.0;     // H
  double voltage_limit = 0.0;  // V

  void validate() const;
};

struct MotorState {
  double omega = 0.0;    // rad/s
  double current = 0.0;  // A
};

struct MotorDerivatives {
  double domega_dt = 0.0;  // rad/s^2
  double dcurrent_dt = 0.0;  // A/s
};

// Propeller load seen by the motor shaft; bundles the blade-element
// model so the integrator can re-evaluate Q at every stage.
struct PropellerLoad {
  BladeGeometry geom;
  AeroModel aero;
  Environment env;
  int stations = kDefaultStations;

  PropLoads loads(double omega, double beta) const {
    // Negative shaft speed only occurs transiently; the aero model is
    // evaluated at |n| with the torque opposing rotation.
    const double n = omega / (2.0 * 3.14159265358979323846);
    if (n >= 0.0) return thrust_and_torque(geom, aero, env, {n, beta}, stations);
    PropLoads l = thrust_and_torque(geom, aero, env, {-n, beta}, stations);
    return {l.thrust, -l.torque};
  }
};

// Right-hand sides of the motor ODEs:
//   domega/dt = (k_b i - B1 omega - Q) / I_m
//   di/dt     = (-R i - k_b omega + v) / L
MotorDerivatives derivatives(const MotorState& state, double v_in,
                             double load_torque, const MotorParams& params);

// One classical RK4 step of the coupled motor + propeller system with
// the load torque re-evaluated at every stage. v_in is clamped to
// [0, voltage_limit] and held over the step. Throws DivergedError on a
// non-finite result.
MotorState step(const MotorState& state, double v_in, double beta, double dt,
                const MotorParams& params, const PropellerLoad& load);

inline double electrical_power(double v_in, double current) {
  return v_in * current;
}

// (voltage, current) at the electrical equilibrium sustaining shaft
// speed omega against load torque Q; used by steady-state evaluators.
std::pair<double, double> steady_state_supply(double omega, double torque,
                                              const MotorParams& params);

}  // namespace pitchopt

#endif  // PITCHOPT_MOTOR_HPP_
