// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef PITCHOPT_PLANT_HPP_
#define PITCHOPT_PLANT_HPP_

#include <functional>
#include <random>
#include <utility>

#include "pitchopt/control.hpp"
#include "pitchopt/motor.hpp"
#include "pitchopt/propeller.hpp"

namespace pitchopt {

// What one set_propeller(beta, T_c) request settles to.
struct SettledMeasurement {
  double power = 0.0;        // W, time-averaged over the settle window
  double thrust = 0.0;       // N, achieved (may be < T_c when saturated)
  double rps = 0.0;          // rev/s at the end of the window
  bool saturated = false;    // supply limit bound for the whole window
  double settle_time = 0.0;  // s from request to settled/saturated
};

struct PlantLimits {
  double power_ceiling = 14.0;               // W, supply limit
  double beta_min = -5.0 * 3.14159265358979323846 / 180.0;   // rad
  double beta_max = 25.0 * 3.14159265358979323846 / 180.0;   // rad
  // Tight band: the optimizer compares sub-percent power differences
  // between neighboring pitch steps, so the averaged measurement must not
  // carry transient bias from the approach direction.
  double settle_tolerance = 0.0005;          // fraction of T_c
  double settle_band_floor = 0.0001;         // N, absolute band floor
  // Long window: the averaged electrical power carries an I omega domega/dt
  // charging term whose time average shrinks as 1/window.
  double settle_window = 3.0;                // s
  double timeout = 20.0;                     // s per request

  void validate() const;
};

// Plant port the optimizers talk to. A hardware implementation would
// sit behind the same interface.
class PlantPort {
 public:
  virtual ~PlantPort() = default;
  virtual SettledMeasurement set_propeller(double beta, double thrust_cmd) = 0;
  virtual std::pair<double, double> beta_range() const = 0;
};

struct TelemetrySample {
  double t = 0.0;           // s
  double thrust_cmd = 0.0;  // N
  double thrust = 0.0;      // N, measured
  double rpm = 0.0;
  double voltage = 0.0;     // V applied
  double current = 0.0;     // A
  double power = 0.0;       // W electrical
};

using TelemetrySink = std::function<void(const TelemetrySample&)>;

struct SimConfig {
  double dt = 1e-4;            // s
  double ramp_duration = 1.6;  // s
  int stations = 128;          // quadrature resolution inside the loop
  double noise_amplitude = 0.0;  // N, uniform on [-a, a], 0 disables
  unsigned seed = 1;
};

// Closed-loop simulation of motor + propeller + thrust PID behind the
// plant port. State persists across requests, as on the bench rig.
class SimulatedPlant : public PlantPort {
 public:
  SimulatedPlant(BladeGeometry geom, AeroModel aero, Environment env,
                 MotorParams motor, PidGains gains, PlantLimits limits,
                 SimConfig sim = {});

  SettledMeasurement set_propeller(double beta, double thrust_cmd) override;
  std::pair<double, double> beta_range() const override {
    return {limits_.beta_min, limits_.beta_max};
  }

  // Fixed-beta run for a fixed duration with per-step telemetry;
  // commands a saturated ramp from the current thrust to thrust_cmd.
  void simulate(double beta, double thrust_cmd, double duration,
                const TelemetrySink& sink);

  double sim_time() const { return time_; }
  const MotorState& motor_state() const { return state_; }

 private:
  // cmd_rate is the ramp slope across this step; the RK4 stages see the
  // command at their own stage times, keeping the scheme 4th order.
  TelemetrySample advance(double beta, double thrust_cmd_now, double cmd_rate);

  BladeGeometry geom_;
  AeroModel aero_;
  Environment env_;
  MotorParams motor_;
  PidGains gains_;
  PlantLimits limits_;
  SimConfig sim_;
  PropellerLoad load_;

  MotorState state_{};
  double pid_integral_ = 0.0;  // V
  double prev_thrust_meas_ = 0.0;
  bool meas_primed_ = false;
  double time_ = 0.0;
  bool limit_bound_ = false;  // supply limit bound on the last step
  std::mt19937 rng_;
};

// Steady-state model evaluation of the same port: the equilibrium the
// simulated loop settles to, computed directly. Serves as the fast
// grid-search oracle.
class ModelPlant : public PlantPort {
 public:
  ModelPlant(BladeGeometry geom, AeroModel aero, Environment env,
             MotorParams motor, PlantLimits limits,
             int stations = kDefaultStations);

  SettledMeasurement set_propeller(double beta, double thrust_cmd) override;
  std::pair<double, double> beta_range() const override {
    return {limits_.beta_min, limits_.beta_max};
  }

 private:
  BladeGeometry geom_;
  AeroModel aero_;
  Environment env_;
  MotorParams motor_;
  PlantLimits limits_;
  int stations_;
};

}  // namespace pitchopt

#endif  // PITCHOPT_PLANT_HPP_
