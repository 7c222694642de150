// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "pitchopt/plant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pitchopt/errors.hpp"
#include "pitchopt/rootfind.hpp"

namespace pitchopt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void PlantLimits::validate() const {
  if (!(power_ceiling > 0.0)) throw ConfigError("power ceiling must be > 0");
  if (!(beta_min < beta_max)) throw ConfigError("beta range must be ordered");
  if (!(settle_tolerance > 0.0 && settle_tolerance < 1.0))
    throw ConfigError("settle tolerance must be in (0, 1)");
  if (!(settle_window > 0.0)) throw ConfigError("settle window must be > 0");
  if (!(timeout > settle_window))
    throw ConfigError("timeout must exceed the settle window");
}

SimulatedPlant::SimulatedPlant(BladeGeometry geom, AeroModel aero,
                               Environment env, MotorParams motor,
                               PidGains gains, PlantLimits limits,
                               SimConfig sim)
    : geom_(std::move(geom)),
      aero_(aero),
      env_(env),
      motor_(motor),
      gains_(gains),
      limits_(limits),
      sim_(sim),
      load_{geom_, aero_, env_, sim_.stations},
      rng_(sim.seed) {
  geom_.validate();
  aero_.validate();
  env_.validate();
  motor_.validate();
  gains_.validate();
  limits_.validate();
}

TelemetrySample SimulatedPlant::advance(double beta, double thrust_cmd_now,
                                        double cmd_rate) {
  double noise = 0.0;
  if (sim_.noise_amplitude > 0.0) {
    std::uniform_real_distribution<double> dist(-sim_.noise_amplitude,
                                                sim_.noise_amplitude);
    noise = dist(rng_);
  }

  // Derivative-on-measurement term, held constant over the step so the
  // stage dynamics stay smooth.
  const double thrust_now = load_.loads(state_.omega, beta).thrust + noise;
  double kd_term = 0.0;
  if (meas_primed_ && gains_.kd > 0.0)
    kd_term = -gains_.kd * (thrust_now - prev_thrust_meas_) / sim_.dt;
  prev_thrust_meas_ = thrust_now;
  meas_primed_ = true;

  bool bound = false;
  double v_applied0 = 0.0;

  struct Stage {
    double domega, dcurrent, dintegral;
  };
  auto eval = [&](double tau, double omega, double current, double integral,
                  bool record) -> Stage {
    const PropLoads loads = load_.loads(omega, beta);
    const double err =
        thrust_cmd_now + cmd_rate * tau - (loads.thrust + noise);
    const double i_term =
        std::clamp(integral, -gains_.integral_limit, gains_.integral_limit);
    const double v_want = gains_.kp * err + i_term + kd_term;
    double v = std::clamp(v_want, 0.0, motor_.voltage_limit);
    if (current > 1e-9 && v * current > limits_.power_ceiling)
      v = limits_.power_ceiling / current;
    if (record) {
      v_applied0 = v;
      if (v_want > v + 1e-9) bound = true;
    }
    const MotorDerivatives d =
        derivatives({omega, current}, v, loads.torque, motor_);
    return {d.domega_dt, d.dcurrent_dt, gains_.ki * err};
  };

  const double dt = sim_.dt;
  const double w = state_.omega, c = state_.current, g = pid_integral_;
  const Stage k1 = eval(0.0, w, c, g, true);
  const Stage k2 =
      eval(0.5 * dt, w + 0.5 * dt * k1.domega, c + 0.5 * dt * k1.dcurrent,
           g + 0.5 * dt * k1.dintegral, false);
  const Stage k3 =
      eval(0.5 * dt, w + 0.5 * dt * k2.domega, c + 0.5 * dt * k2.dcurrent,
           g + 0.5 * dt * k2.dintegral, false);
  const Stage k4 = eval(dt, w + dt * k3.domega, c + dt * k3.dcurrent,
                        g + dt * k3.dintegral, false);

  state_.omega =
      w + dt / 6.0 * (k1.domega + 2.0 * k2.domega + 2.0 * k3.domega + k4.domega);
  state_.current = c + dt / 6.0 * (k1.dcurrent + 2.0 * k2.dcurrent +
                                   2.0 * k3.dcurrent + k4.dcurrent);
  pid_integral_ =
      std::clamp(g + dt / 6.0 * (k1.dintegral + 2.0 * k2.dintegral +
                                 2.0 * k3.dintegral + k4.dintegral),
                 -gains_.integral_limit, gains_.integral_limit);
  if (!std::isfinite(state_.omega) || !std::isfinite(state_.current))
    throw DivergedError("non-finite plant state");

  limit_bound_ = bound;
  time_ += dt;

  TelemetrySample s;
  s.t = time_;
  s.thrust_cmd = thrust_cmd_now;
  s.thrust = thrust_now;
  s.rpm = state_.omega * 60.0 / kTwoPi;
  s.voltage = v_applied0;
  s.current = state_.current;
  s.power = v_applied0 * std::max(state_.current, 0.0);
  return s;
}

SettledMeasurement SimulatedPlant::set_propeller(double beta,
                                                 double thrust_cmd) {
  if (beta < limits_.beta_min || beta > limits_.beta_max)
    throw BetaOutOfRangeError("pitch command outside the actuator range");
  if (thrust_cmd < 0.0)
    throw BetaOutOfRangeError("thrust command must be >= 0");

  const double thrust_start = load_.loads(state_.omega, beta).thrust;
  const double band = std::max(limits_.settle_tolerance * thrust_cmd,
                               limits_.settle_band_floor);

  double band_elapsed = 0.0, band_power = 0.0, band_thrust = 0.0;
  double sat_elapsed = 0.0, sat_power = 0.0, sat_thrust = 0.0;
  long band_n = 0, sat_n = 0;

  const double ramp_rate = (thrust_cmd - thrust_start) / sim_.ramp_duration;
  const long n_steps = std::lround(limits_.timeout / sim_.dt);
  for (long i = 0; i < n_steps; ++i) {
    const double t = i * sim_.dt;
    const double frac = std::min(1.0, t / sim_.ramp_duration);
    const double cmd_now = thrust_start + (thrust_cmd - thrust_start) * frac;
    const TelemetrySample s =
        advance(beta, cmd_now, frac < 1.0 ? ramp_rate : 0.0);
    if (t + sim_.dt < sim_.ramp_duration) continue;

    if (std::abs(s.thrust - thrust_cmd) <= band) {
      band_elapsed += sim_.dt;
      band_power += s.power;
      band_thrust += s.thrust;
      ++band_n;
      if (band_elapsed >= limits_.settle_window)
        return {band_power / band_n, band_thrust / band_n,
                state_.omega / kTwoPi, false, t + sim_.dt};
    } else {
      band_elapsed = 0.0;
      band_power = 0.0;
      band_thrust = 0.0;
      band_n = 0;
      if (limit_bound_) {
        sat_elapsed += sim_.dt;
        sat_power += s.power;
        sat_thrust += s.thrust;
        ++sat_n;
        if (sat_elapsed >= limits_.settle_window)
          return {sat_power / sat_n, std::max(0.0, sat_thrust / sat_n),
                  state_.omega / kTwoPi, true, t + sim_.dt};
      } else {
        sat_elapsed = 0.0;
        sat_power = 0.0;
        sat_thrust = 0.0;
        sat_n = 0;
      }
    }
  }
  throw NoSettleError("closed loop neither settled nor saturated in time");
}

void SimulatedPlant::simulate(double beta, double thrust_cmd, double duration,
                              const TelemetrySink& sink) {
  if (beta < limits_.beta_min || beta > limits_.beta_max)
    throw BetaOutOfRangeError("pitch command outside the actuator range");
  const double thrust_start = load_.loads(state_.omega, beta).thrust;
  const double ramp_rate = (thrust_cmd - thrust_start) / sim_.ramp_duration;
  const long n_steps = std::lround(duration / sim_.dt);
  for (long i = 0; i < n_steps; ++i) {
    const double t = i * sim_.dt;
    const double frac = std::min(1.0, t / sim_.ramp_duration);
    const double cmd_now = thrust_start + (thrust_cmd - thrust_start) * frac;
    sink(advance(beta, cmd_now, frac < 1.0 ? ramp_rate : 0.0));
  }
}

ModelPlant::ModelPlant(BladeGeometry geom, AeroModel aero, Environment env,
                       MotorParams motor, PlantLimits limits, int stations)
    : geom_(std::move(geom)),
      aero_(aero),
      env_(env),
      motor_(motor),
      limits_(limits),
      stations_(stations) {}

SettledMeasurement ModelPlant::set_propeller(double beta, double thrust_cmd) {
  if (beta < limits_.beta_min || beta > limits_.beta_max)
    throw BetaOutOfRangeError("pitch command outside the actuator range");

  auto electrical = [&](double n) {
    const double q = torque(geom_, aero_, env_, {n, beta}, stations_);
    const auto [v, i] = steady_state_supply(kTwoPi * n, q, motor_);
    return std::pair{v, v * i};
  };

  SolverLimits lim;
  try {
    const double n = solve_speed_for_thrust(geom_, aero_, env_, beta,
                                            thrust_cmd, lim, stations_);
    const auto [v, p] = electrical(n);
    if (v <= motor_.voltage_limit && p <= limits_.power_ceiling)
      return {std::max(0.0, p), thrust_cmd, n, false, 0.0};
  } catch (const UnachievableError&) {
    // Falls through to the supply-limited branch.
  }

  // Supply limit binds: run at the largest speed the supply sustains.
  double n_lim = lim.rps_ceiling;
  const auto [v_top, p_top] = electrical(n_lim);
  if (v_top > motor_.voltage_limit) {
    n_lim = std::min(
        n_lim, brent_root([&](double n) {
                 return electrical(n).first - motor_.voltage_limit;
               }, 0.0, n_lim, 1e-10, 1e-9));
  }
  if (electrical(n_lim).second > limits_.power_ceiling) {
    n_lim = std::min(
        n_lim, brent_root([&](double n) {
                 return electrical(n).second - limits_.power_ceiling;
               }, 0.0, n_lim, 1e-10, 1e-9));
  }
  const double t_lim = thrust(geom_, aero_, env_, {n_lim, beta}, stations_);
  const double p_lim = electrical(n_lim).second;
  return {std::max(0.0, p_lim), std::max(0.0, t_lim), n_lim, true, 0.0};
}

}  // namespace pitchopt
