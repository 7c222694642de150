// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef PITCHOPT_PROPELLER_HPP_
#define PITCHOPT_PROPELLER_HPP_

#include <utility>
#include <vector>

namespace pitchopt {

// Blade planform: diameter, blade count, and a tabulated chord
// distribution c(r) interpolated piecewise-linearly between stations.
struct BladeGeometry {
  double diameter_m = 0.0;
  int blade_count = 0;
  // (radius m, chord m) pairs; radii strictly increasing, within
  // [0, diameter/2].
  std::vector<std::pair<double, double>> chord_stations;

  // Throws ConfigError on an invalid planform.
  void validate() const;

  // Piecewise-linear chord at radius r; clamps to the end stations.
  double chord_at(double r) const;

  double root_radius() const { return chord_stations.front().first; }
  double tip_radius() const { return chord_stations.back().first; }
};

// Linear lift curve with quadratic drag polar:
//   CL = cl_alpha * (alpha - alpha0)
//   CD = cd0 + k * cl_alpha^2 * (alpha - alpha0)^2
struct AeroModel {
  double cl_alpha = 0.0;   // 1/rad
  double alpha0 = 0.0;     // rad
  double cd0 = 0.0;
  double k_induced = 0.0;

  void validate() const;
};

struct Environment {
  double rho = 1.225;      // kg/m^3
  double airspeed = 0.0;   // m/s, axial

  void validate() const;
};

struct OperatingPoint {
  double rps = 0.0;        // rev/s
  double beta = 0.0;       // rad, pitch angle at the blade section chord
};

struct SectionCoefficients {
  double cl = 0.0;
  double cd = 0.0;
};

struct PropLoads {
  double thrust = 0.0;     // N
  double torque = 0.0;     // N*m
};

// Tolerances and limits for the implicit speed solvers.
struct SolverLimits {
  double rps_ceiling = 500.0;      // hard upper bound on the bracket
  double rps_bracket_init = 50.0;  // first bracket upper edge
  double rel_tol = 1e-9;           // residual tolerance, relative and abs floor
};

inline constexpr int kDefaultStations = 256;

// Squared section speed V^2 + (2 pi r n)^2, evaluated dimensionally so
// n = 0 is regular.
double section_speed_squared(double r, double rps, const Environment& env);

// Inflow angle arctan(V / (2 pi r n)) in [0, pi/2]. The all-zero
// degenerate input maps to 0 (the integrand vanishes there anyway).
double inflow_angle(double r, double rps, const Environment& env);

SectionCoefficients section_coefficients(double alpha, const AeroModel& aero);

// Spanwise quadrature of Eq-style blade-element integrands over the
// chord table, composite Simpson on a uniform grid of `stations`
// intervals (rounded up to even).
PropLoads thrust_and_torque(const BladeGeometry& geom, const AeroModel& aero,
                            const Environment& env, const OperatingPoint& op,
                            int stations = kDefaultStations);

double thrust(const BladeGeometry& geom, const AeroModel& aero,
              const Environment& env, const OperatingPoint& op,
              int stations = kDefaultStations);

double torque(const BladeGeometry& geom, const AeroModel& aero,
              const Environment& env, const OperatingPoint& op,
              int stations = kDefaultStations);

// Shaft power, exactly 2*pi*n*torque (shared code path).
double power(const BladeGeometry& geom, const AeroModel& aero,
             const Environment& env, const OperatingPoint& op,
             int stations = kDefaultStations);

// Solves T(n) = thrust_target for n at fixed (beta, V). Bracketed root
// finding with automatic bracket expansion; throws UnachievableError if
// the ceiling cannot deliver the target, NonMonotonicError if T(n) is
// not increasing on the bracket.
double solve_speed_for_thrust(const BladeGeometry& geom, const AeroModel& aero,
                              const Environment& env, double beta,
                              double thrust_target,
                              const SolverLimits& lim = {},
                              int stations = kDefaultStations);

// Mirror of solve_speed_for_thrust with P(n) as the monotone map.
double solve_speed_for_power(const BladeGeometry& geom, const AeroModel& aero,
                             const Environment& env, double beta,
                             double power_target,
                             const SolverLimits& lim = {},
                             int stations = kDefaultStations);

// Shaft power at the speed that delivers thrust_target.
double required_power(const BladeGeometry& geom, const AeroModel& aero,
                      const Environment& env, double beta,
                      double thrust_target, const SolverLimits& lim = {},
                      int stations = kDefaultStations);

// Thrust at the speed that absorbs the given shaft power.
double thrust_from_power(const BladeGeometry& geom, const AeroModel& aero,
                         const Environment& env, double beta,
                         double shaft_power, const SolverLimits& lim = {},
                         int stations = kDefaultStations);

}  // namespace pitchopt

#endif  // PITCHOPT_PROPELLER_HPP_
