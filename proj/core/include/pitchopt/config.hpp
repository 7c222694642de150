// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef PITCHOPT_CONFIG_HPP_
#define PITCHOPT_CONFIG_HPP_

#include <map>
#include <string>

#include "pitchopt/control.hpp"
#include "pitchopt/motor.hpp"
#include "pitchopt/optimizer.hpp"
#include "pitchopt/plant.hpp"
#include "pitchopt/propeller.hpp"

namespace pitchopt {

// Flat `key = value` file; '#' starts a comment. Unknown keys are a
// ConfigError so typos do not silently fall back to defaults.
class KeyValueFile {
 public:
  static KeyValueFile parse(const std::string& text);
  static KeyValueFile load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

// Everything one run needs. Defaults are the reference bench model;
// they are stand-in values, not measurements.
struct RunConfig {
  BladeGeometry geometry;
  AeroModel aero;
  Environment env;
  MotorParams motor;
  PidGains gains;
  PlantLimits limits;
  SimConfig sim;
  OptimizerConfig optimizer;
  Calibration calibration;
};

// The built-in reference configuration.
RunConfig default_config();

// default_config overridden by the keys present in the file.
RunConfig load_config(const std::string& path);

// Applies overrides from an already-parsed file.
void apply_config(const KeyValueFile& kv, RunConfig& cfg);

// "r0:c0;r1:c1;..." chord table parser (meters).
std::vector<std::pair<double, double>> parse_chord_table(
    const std::string& text);

}  // namespace pitchopt

#endif  // PITCHOPT_CONFIG_HPP_
