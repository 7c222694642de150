// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "pitchopt/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "pitchopt/errors.hpp"

namespace pitchopt {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      // propeller + environment
      "diameter_m", "blades", "chord_table", "cl_alpha", "alpha0_rad", "cd0",
      "k_induced", "rho", "airspeed",
      // motor
      "inertia", "emf_k", "viscous_b1", "resistance", "inductance",
      "voltage_limit",
      // pid
      "kp", "ki", "kd", "integral_limit",
      // plant limits
      "power_ceiling", "beta_min_deg", "beta_max_deg", "settle_tolerance",
      "settle_band_floor", "settle_window", "timeout",
      // simulation
      "dt", "ramp_duration", "sim_stations", "noise_amplitude", "seed",
      // optimizer
      "beta_init_deg", "pitch_step_deg", "step_decrement_deg", "min_step_deg",
      "thrust_cmd", "max_iterations", "max_sim_seconds",
      "convergence_reversals",
      // calibration
      "cal_voltage_scale", "cal_voltage_offset", "cal_current_scale",
      "cal_current_offset", "cal_thrust_scale", "cal_thrust_offset",
      "cal_pitch_scale", "cal_pitch_offset"};
  return keys;
}

}  // namespace

KeyValueFile KeyValueFile::parse(const std::string& text) {
  KeyValueFile kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!known_keys().count(key))
      throw ConfigError("unknown config key '" + key + "'");
    kv.values_[key] = value;
  }
  return kv;
}

KeyValueFile KeyValueFile::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse(buf.str());
}

double KeyValueFile::get_double(const std::string& key,
                                double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' is not a number: " + it->second);
  }
}

int KeyValueFile::get_int(const std::string& key, int fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    size_t pos = 0;
    const int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' is not an integer: " + it->second);
  }
}

std::string KeyValueFile::get_string(const std::string& key,
                                     const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

std::vector<std::pair<double, double>> parse_chord_table(
    const std::string& text) {
  std::vector<std::pair<double, double>> table;
  std::istringstream in(text);
  std::string entry;
  while (std::getline(in, entry, ';')) {
    entry = trim(entry);
    if (entry.empty()) continue;
    const auto colon = entry.find(':');
    if (colon == std::string::npos)
      throw ConfigError("chord_table entry '" + entry + "' needs r:c");
    try {
      table.emplace_back(std::stod(entry.substr(0, colon)),
                         std::stod(entry.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ConfigError("chord_table entry '" + entry + "' is not numeric");
    }
  }
  return table;
}

RunConfig default_config() {
  RunConfig cfg;
  // Stand-in bench model: plausible values for a small two-blade
  // variable-pitch prop on a ~1200 Kv outrunner, not measured data.
  cfg.geometry = {0.25, 2, {{0.02, 0.025}, {0.125, 0.012}}};
  cfg.aero = {5.7, 0.0, 0.015, 0.05};
  cfg.env = {1.225, 0.0};
  cfg.motor = {2e-5, 7.96e-3, 1e-6, 2.0, 1e-3, 12.0};
  cfg.gains = {25.0, 140.0, 0.0, 12.0};
  cfg.limits = {};
  cfg.sim = {};
  cfg.optimizer = {0.59 * kDegToRad, 0.59 * kDegToRad, 0.59 * kDegToRad,
                   0.59 * kDegToRad, 0.52,  200, 180.0, 0};
  return cfg;
}

void apply_config(const KeyValueFile& kv, RunConfig& cfg) {
  cfg.geometry.diameter_m = kv.get_double("diameter_m", cfg.geometry.diameter_m);
  cfg.geometry.blade_count = kv.get_int("blades", cfg.geometry.blade_count);
  if (kv.has("chord_table"))
    cfg.geometry.chord_stations =
        parse_chord_table(kv.get_string("chord_table", ""));
  cfg.aero.cl_alpha = kv.get_double("cl_alpha", cfg.aero.cl_alpha);
  cfg.aero.alpha0 = kv.get_double("alpha0_rad", cfg.aero.alpha0);
  cfg.aero.cd0 = kv.get_double("cd0", cfg.aero.cd0);
  cfg.aero.k_induced = kv.get_double("k_induced", cfg.aero.k_induced);
  cfg.env.rho = kv.get_double("rho", cfg.env.rho);
  cfg.env.airspeed = kv.get_double("airspeed", cfg.env.airspeed);

  cfg.motor.inertia = kv.get_double("inertia", cfg.motor.inertia);
  cfg.motor.emf_k = kv.get_double("emf_k", cfg.motor.emf_k);
  cfg.motor.viscous_b1 = kv.get_double("viscous_b1", cfg.motor.viscous_b1);
  cfg.motor.resistance = kv.get_double("resistance", cfg.motor.resistance);
  cfg.motor.inductance = kv.get_double("inductance", cfg.motor.inductance);
  cfg.motor.voltage_limit =
      kv.get_double("voltage_limit", cfg.motor.voltage_limit);

  cfg.gains.kp = kv.get_double("kp", cfg.gains.kp);
  cfg.gains.ki = kv.get_double("ki", cfg.gains.ki);
  cfg.gains.kd = kv.get_double("kd", cfg.gains.kd);
  cfg.gains.integral_limit =
      kv.get_double("integral_limit", cfg.gains.integral_limit);

  cfg.limits.power_ceiling =
      kv.get_double("power_ceiling", cfg.limits.power_ceiling);
  cfg.limits.beta_min =
      kv.get_double("beta_min_deg", cfg.limits.beta_min / kDegToRad) *
      kDegToRad;
  cfg.limits.beta_max =
      kv.get_double("beta_max_deg", cfg.limits.beta_max / kDegToRad) *
      kDegToRad;
  cfg.limits.settle_tolerance =
      kv.get_double("settle_tolerance", cfg.limits.settle_tolerance);
  cfg.limits.settle_band_floor =
      kv.get_double("settle_band_floor", cfg.limits.settle_band_floor);
  cfg.limits.settle_window =
      kv.get_double("settle_window", cfg.limits.settle_window);
  cfg.limits.timeout = kv.get_double("timeout", cfg.limits.timeout);

  cfg.sim.dt = kv.get_double("dt", cfg.sim.dt);
  cfg.sim.ramp_duration = kv.get_double("ramp_duration", cfg.sim.ramp_duration);
  cfg.sim.stations = kv.get_int("sim_stations", cfg.sim.stations);
  cfg.sim.noise_amplitude =
      kv.get_double("noise_amplitude", cfg.sim.noise_amplitude);
  cfg.sim.seed = static_cast<unsigned>(
      kv.get_int("seed", static_cast<int>(cfg.sim.seed)));

  auto& opt = cfg.optimizer;
  opt.beta_init =
      kv.get_double("beta_init_deg", opt.beta_init / kDegToRad) * kDegToRad;
  opt.pitch_step =
      kv.get_double("pitch_step_deg", opt.pitch_step / kDegToRad) * kDegToRad;
  opt.step_decrement =
      kv.get_double("step_decrement_deg", opt.step_decrement / kDegToRad) *
      kDegToRad;
  opt.min_step =
      kv.get_double("min_step_deg", opt.min_step / kDegToRad) * kDegToRad;
  opt.thrust_cmd = kv.get_double("thrust_cmd", opt.thrust_cmd);
  opt.max_iterations = kv.get_int("max_iterations", opt.max_iterations);
  opt.max_sim_seconds = kv.get_double("max_sim_seconds", opt.max_sim_seconds);
  opt.convergence_reversals =
      kv.get_int("convergence_reversals", opt.convergence_reversals);

  auto& cal = cfg.calibration;
  cal.supply_voltage.scale =
      kv.get_double("cal_voltage_scale", cal.supply_voltage.scale);
  cal.supply_voltage.offset =
      kv.get_double("cal_voltage_offset", cal.supply_voltage.offset);
  cal.motor_current.scale =
      kv.get_double("cal_current_scale", cal.motor_current.scale);
  cal.motor_current.offset =
      kv.get_double("cal_current_offset", cal.motor_current.offset);
  cal.load_cell.scale = kv.get_double("cal_thrust_scale", cal.load_cell.scale);
  cal.load_cell.offset =
      kv.get_double("cal_thrust_offset", cal.load_cell.offset);
  cal.servo_pitch.scale =
      kv.get_double("cal_pitch_scale", cal.servo_pitch.scale);
  cal.servo_pitch.offset =
      kv.get_double("cal_pitch_offset", cal.servo_pitch.offset);

  cfg.geometry.validate();
  cfg.aero.validate();
  cfg.env.validate();
  cfg.motor.validate();
  cfg.gains.validate();
  cfg.limits.validate();
}

RunConfig load_config(const std::string& path) {
  RunConfig cfg = default_config();
  apply_config(KeyValueFile::load(path), cfg);
  return cfg;
}

}  // namespace pitchopt
