// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "pitchopt/propeller.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "pitchopt/errors.hpp"
#include "pitchopt/rootfind.hpp"

namespace pitchopt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void BladeGeometry::validate() const {
  if (!(diameter_m > 0.0)) throw ConfigError("diameter must be > 0");
  if (blade_count < 1) throw ConfigError("blade count must be >= 1");
  if (chord_stations.size() < 2)
    throw ConfigError("chord table needs at least 2 stations");
  double prev = -1.0;
  for (const auto& [r, c] : chord_stations) {
    if (!(r >= 0.0 && r <= diameter_m / 2.0))
      throw ConfigError("chord station radius outside [0, d/2]");
    if (!(r > prev)) throw ConfigError("chord station radii must increase");
    if (!(c >= 0.0)) throw ConfigError("chord must be >= 0");
    prev = r;
  }
}

double BladeGeometry::chord_at(double r) const {
  const auto& s = chord_stations;
  if (r <= s.front().first) return s.front().second;
  if (r >= s.back().first) return s.back().second;
  auto hi = std::upper_bound(
      s.begin(), s.end(), r,
      [](double v, const auto& st) { return v < st.first; });
  auto lo = hi - 1;
  const double t = (r - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

void AeroModel::validate() const {
  if (!(cl_alpha > 0.0)) throw ConfigError("cl_alpha must be > 0");
  if (!(cd0 >= 0.0)) throw ConfigError("cd0 must be >= 0");
  if (!(k_induced >= 0.0)) throw ConfigError("k_induced must be >= 0");
}

void Environment::validate() const {
  if (!(rho > 0.0)) throw ConfigError("air density must be > 0");
  if (!(airspeed >= 0.0)) throw ConfigError("airspeed must be >= 0");
}

double section_speed_squared(double r, double rps, const Environment& env) {
  const double tangential = kTwoPi * r * rps;
  return env.airspeed * env.airspeed + tangential * tangential;
}

double inflow_angle(double r, double rps, const Environment& env) {
  const double tangential = kTwoPi * r * rps;
  if (env.airspeed == 0.0 && tangential == 0.0) return 0.0;
  return std::atan2(env.airspeed, tangential);
}

SectionCoefficients section_coefficients(double alpha, const AeroModel& aero) {
  const double cl = aero.cl_alpha * (alpha - aero.alpha0);
  return {cl, aero.cd0 + aero.k_induced * cl * cl};
}

PropLoads thrust_and_torque(const BladeGeometry& geom, const AeroModel& aero,
                            const Environment& env, const OperatingPoint& op,
                            int stations) {
  // Composite Simpson over [r_root, r_tip]; one pass computes both
  // integrands since they share the section kinematics.
  int n = std::max(2, stations);
  if (n % 2 != 0) ++n;
  const double r0 = geom.root_radius();
  const double r1 = geom.tip_radius();
  const double h = (r1 - r0) / n;

  double thrust_sum = 0.0;
  double torque_sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double r = r0 + i * h;
    const double w2 = section_speed_squared(r, op.rps, env);
    if (w2 == 0.0) continue;
    const double gamma = inflow_angle(r, op.rps, env);
    const auto [cl, cd] = section_coefficients(op.beta - gamma, aero);
    const double cg = std::cos(gamma);
    const double sg = std::sin(gamma);
    const double q = 0.5 * env.rho * w2 * geom.chord_at(r);
    const double weight = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    thrust_sum += weight * q * (cl * cg - cd * sg);
    torque_sum += weight * q * (cl * sg + cd * cg) * r;
  }
  const double scale = geom.blade_count * h / 3.0;
  return {scale * thrust_sum, scale * torque_sum};
}

double thrust(const BladeGeometry& geom, const AeroModel& aero,
              const Environment& env, const OperatingPoint& op, int stations) {
  return thrust_and_torque(geom, aero, env, op, stations).thrust;
}

double torque(const BladeGeometry& geom, const AeroModel& aero,
              const Environment& env, const OperatingPoint& op, int stations) {
  return thrust_and_torque(geom, aero, env, op, stations).torque;
}

double power(const BladeGeometry& geom, const AeroModel& aero,
             const Environment& env, const OperatingPoint& op, int stations) {
  return kTwoPi * op.rps * torque(geom, aero, env, op, stations);
}

namespace {

// Shared solver core: inverts a map n -> value that must be increasing
// on the bracket.
double solve_monotone(const std::function<double(double)>& value_of_rps,
                      double target, const SolverLimits& lim,
                      const char* quantity) {
  if (target < 0.0)
    throw UnachievableError(std::string("negative ") + quantity + " target");

  const double f0 = value_of_rps(0.0) - target;
  if (f0 == 0.0) return 0.0;
  if (f0 > 0.0)
    throw NonMonotonicError(std::string(quantity) +
                            " already exceeds target at n = 0");

  double hi = lim.rps_bracket_init;
  while (value_of_rps(hi) < target) {
    if (hi >= lim.rps_ceiling)
      throw UnachievableError(std::string(quantity) +
                              " target unreachable below the speed ceiling");
    hi = std::min(hi * 2.0, lim.rps_ceiling);
  }

  // Uniqueness spot-check: the value may dip below its n = 0 level at low
  // speed (forward inflow drives the section angle negative), but once it
  // rises past the target it must stay there, or the crossing is not unique.
  constexpr int kProbes = 8;
  bool above = false;
  for (int i = 1; i <= kProbes; ++i) {
    const double v = value_of_rps(hi * i / kProbes) - target;
    if (above && v < -1e-12 * (std::abs(target) + 1.0))
      throw NonMonotonicError(std::string(quantity) +
                              "(n) crosses the target more than once on the "
                              "bracket");
    if (v >= 0.0) above = true;
  }

  const double f_tol = std::max(lim.rel_tol, lim.rel_tol * target);
  const double n_star = brent_root(
      [&](double n) { return value_of_rps(n) - target; }, 0.0, hi,
      /*x_tol=*/1e-13 * std::max(1.0, hi), f_tol);
  return n_star;
}

}  // namespace

double solve_speed_for_thrust(const BladeGeometry& geom, const AeroModel& aero,
                              const Environment& env, double beta,
                              double thrust_target, const SolverLimits& lim,
                              int stations) {
  return solve_monotone(
      [&](double n) {
        return thrust(geom, aero, env, {n, beta}, stations);
      },
      thrust_target, lim, "thrust");
}

double solve_speed_for_power(const BladeGeometry& geom, const AeroModel& aero,
                             const Environment& env, double beta,
                             double power_target, const SolverLimits& lim,
                             int stations) {
  return solve_monotone(
      [&](double n) {
        return power(geom, aero, env, {n, beta}, stations);
      },
      power_target, lim, "power");
}

double required_power(const BladeGeometry& geom, const AeroModel& aero,
                      const Environment& env, double beta,
                      double thrust_target, const SolverLimits& lim,
                      int stations) {
  const double n =
      solve_speed_for_thrust(geom, aero, env, beta, thrust_target, lim,
                             stations);
  return power(geom, aero, env, {n, beta}, stations);
}

double thrust_from_power(const BladeGeometry& geom, const AeroModel& aero,
                         const Environment& env, double beta,
                         double shaft_power, const SolverLimits& lim,
                         int stations) {
  const double n = solve_speed_for_power(geom, aero, env, beta, shaft_power,
                                         lim, stations);
  return thrust(geom, aero, env, {n, beta}, stations);
}

}  // namespace pitchopt
