// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
//
// pitchopt: blade-element propeller curves, closed-loop simulation, and
// online pitch optimization, all emitted as CSV.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pitchopt/config.hpp"
#include "pitchopt/csv.hpp"
#include "pitchopt/errors.hpp"
#include "pitchopt/optimizer.hpp"
#include "pitchopt/plant.hpp"
#include "pitchopt/propeller.hpp"

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

using pitchopt::CsvWriter;

std::vector<double> parse_range(const std::string& spec) {
  double lo, hi, step;
  char c1, c2;
  std::istringstream in(spec);
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !in.eof())
    throw pitchopt::ConfigError("range must be lo:hi:step, got '" + spec +
                                "'");
  if (step <= 0.0 || hi < lo)
    throw pitchopt::ConfigError("empty or inverted range '" + spec + "'");
  std::vector<double> grid;
  for (double v = lo; v <= hi + 1e-9 * step; v += step) grid.push_back(v);
  return grid;
}

std::vector<double> parse_list(const std::string& spec) {
  std::vector<double> values;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) values.push_back(std::stod(item));
  if (values.empty())
    throw pitchopt::ConfigError("empty list '" + spec + "'");
  return values;
}

struct OutputStream {
  std::ofstream file;
  std::ostream* out = &std::cout;

  explicit OutputStream(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file)
      throw pitchopt::ConfigError("cannot open output file: " + path);
    out = &file;
  }
};

int run_sweep(const pitchopt::RunConfig& cfg, double thrust_cmd,
              const std::string& airspeeds, const std::string& beta_range,
              const std::string& output) {
  const auto speeds = parse_list(airspeeds);
  const auto betas_deg = parse_range(beta_range);
  OutputStream os(output);
  CsvWriter csv(*os.out, {"V", "beta_deg", "power_W", "rps", "achievable"});
  for (double v : speeds) {
    pitchopt::Environment env{cfg.env.rho, v};
    for (double beta_deg : betas_deg) {
      const double beta = beta_deg * kDegToRad;
      try {
        const double n = pitchopt::solve_speed_for_thrust(
            cfg.geometry, cfg.aero, env, beta, thrust_cmd);
        const double p =
            pitchopt::power(cfg.geometry, cfg.aero, env, {n, beta});
        csv.row({CsvWriter::num(v), CsvWriter::num(beta_deg),
                 CsvWriter::num(p), CsvWriter::num(n), "1"});
      } catch (const pitchopt::UnachievableError&) {
        csv.row({CsvWriter::num(v), CsvWriter::num(beta_deg), "", "", "0"});
      } catch (const pitchopt::NonMonotonicError&) {
        csv.row({CsvWriter::num(v), CsvWriter::num(beta_deg), "", "", "0"});
      }
    }
  }
  return 0;
}

int run_surface(const pitchopt::RunConfig& cfg, const std::string& power_range,
                const std::string& beta_range, double airspeed,
                const std::string& output) {
  const auto powers = parse_range(power_range);
  const auto betas_deg = parse_range(beta_range);
  pitchopt::Environment env{cfg.env.rho, airspeed};
  OutputStream os(output);
  CsvWriter csv(*os.out, {"power_W", "beta_deg", "thrust_N"});
  for (double p : powers) {
    for (double beta_deg : betas_deg) {
      const double beta = beta_deg * kDegToRad;
      try {
        const double t = pitchopt::thrust_from_power(cfg.geometry, cfg.aero,
                                                     env, beta, p);
        csv.row({CsvWriter::num(p), CsvWriter::num(beta_deg),
                 CsvWriter::num(t)});
      } catch (const std::runtime_error&) {
        csv.row({CsvWriter::num(p), CsvWriter::num(beta_deg), ""});
      }
    }
  }
  return 0;
}

void write_trace(std::ostream& out, const pitchopt::OptimizationTrace& trace) {
  CsvWriter csv(out, {"iter", "t_s", "beta_deg", "power_W", "thrust_N",
                      "direction", "step_deg", "saturated"});
  for (const auto& r : trace.rows)
    csv.row({std::to_string(r.iteration), CsvWriter::num(r.time),
             CsvWriter::num(r.beta / kDegToRad), CsvWriter::num(r.power),
             CsvWriter::num(r.thrust), std::to_string(r.direction),
             CsvWriter::num(r.step / kDegToRad), r.saturated ? "1" : "0"});
}

int run_optimize(pitchopt::RunConfig cfg, const std::string& algorithm,
                 double noise, const std::string& output) {
  cfg.sim.noise_amplitude = noise;
  OutputStream os(output);

  if (cfg.optimizer.max_iterations == 0 && cfg.optimizer.max_sim_seconds <= 0) {
    CsvWriter csv(*os.out, {"iter", "t_s", "beta_deg", "power_W", "thrust_N",
                            "direction", "step_deg", "saturated"});
    return 0;
  }

  pitchopt::SimulatedPlant plant(cfg.geometry, cfg.aero, cfg.env, cfg.motor,
                                 cfg.gains, cfg.limits, cfg.sim);
  pitchopt::OptimizationTrace trace;
  if (algorithm == "fixed")
    trace = pitchopt::fixed_step_optimize(plant, cfg.optimizer);
  else
    trace = pitchopt::variable_step_optimize(plant, cfg.optimizer);

  write_trace(*os.out, trace);
  const auto& last = trace.rows.back();
  std::cerr << "terminal beta = " << last.beta / kDegToRad
            << " deg, terminal power = " << last.power << " W, plant calls = "
            << trace.plant_calls << "\n";
  return 0;
}

int run_simulate(const pitchopt::RunConfig& cfg, double beta_deg,
                 double thrust_cmd, double duration, int every,
                 const std::string& output) {
  pitchopt::SimulatedPlant plant(cfg.geometry, cfg.aero, cfg.env, cfg.motor,
                                 cfg.gains, cfg.limits, cfg.sim);
  OutputStream os(output);
  CsvWriter csv(*os.out, {"t_s", "T_cmd_N", "T_meas_N", "rpm", "v_V", "i_A",
                          "power_W"});
  long count = 0;
  plant.simulate(beta_deg * kDegToRad, thrust_cmd, duration,
                 [&](const pitchopt::TelemetrySample& s) {
                   if (count++ % every) return;
                   csv.row({CsvWriter::num(s.t), CsvWriter::num(s.thrust_cmd),
                            CsvWriter::num(s.thrust), CsvWriter::num(s.rpm),
                            CsvWriter::num(s.voltage),
                            CsvWriter::num(s.current),
                            CsvWriter::num(s.power)});
                 });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DC motor + variable-pitch propeller simulation and online "
               "pitch optimization"};
  app.require_subcommand(1);

  std::string config_path, output;
  app.add_option("--config", config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  app.add_option("-o,--output", output, "output CSV path (default stdout)");

  auto* sweep = app.add_subcommand(
      "sweep", "required power vs pitch angle at fixed thrust");
  double sweep_thrust = 0.3;
  std::string sweep_speeds = "1,4,10", sweep_betas = "0:25:0.25";
  sweep->add_option("--thrust", sweep_thrust, "commanded thrust, N");
  sweep->add_option("--airspeeds", sweep_speeds, "comma list of airspeeds, m/s");
  sweep->add_option("--beta-range", sweep_betas, "lo:hi:step in degrees");

  auto* surface = app.add_subcommand(
      "surface", "thrust vs (power, pitch angle) grid at fixed airspeed");
  std::string surf_powers = "0.5:10:0.5", surf_betas = "0:25:0.5";
  double surf_speed = 3.0;
  surface->add_option("--power-range", surf_powers, "lo:hi:step in W");
  surface->add_option("--beta-range", surf_betas, "lo:hi:step in degrees");
  surface->add_option("--airspeed", surf_speed, "airspeed, m/s");

  auto* optimize = app.add_subcommand(
      "optimize", "online pitch hill climb on the simulated plant");
  std::string algorithm = "fixed";
  double noise = 0.0;
  optimize->add_option("--algorithm", algorithm, "fixed | variable")
      ->check(CLI::IsMember({"fixed", "variable"}));
  optimize->add_option("--noise", noise,
                       "measurement noise amplitude, N (uniform)");

  auto* simulate = app.add_subcommand(
      "simulate", "fixed-pitch closed-loop time series");
  double sim_beta = 9.0, sim_thrust = 0.32, sim_duration = 10.0;
  int sim_every = 10;
  simulate->add_option("--beta", sim_beta, "pitch angle, degrees");
  simulate->add_option("--thrust", sim_thrust, "commanded thrust, N");
  simulate->add_option("--duration", sim_duration, "simulated seconds");
  simulate->add_option("--every", sim_every, "emit every Nth sample")
      ->check(CLI::PositiveNumber);

  // Let --config / --output appear after the subcommand name too.
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    pitchopt::RunConfig cfg = pitchopt::default_config();
    std::optional<pitchopt::KeyValueFile> kv;
    if (!config_path.empty()) {
      kv = pitchopt::KeyValueFile::load(config_path);
      pitchopt::apply_config(*kv, cfg);
    }

    if (sweep->parsed())
      return run_sweep(cfg, sweep_thrust, sweep_speeds, sweep_betas, output);
    if (surface->parsed())
      return run_surface(cfg, surf_powers, surf_betas, surf_speed, output);
    if (optimize->parsed()) {
      // The variable-step climb starts at 3x the base step unless the
      // config pins pitch_step_deg explicitly.
      if (algorithm == "variable" && (!kv || !kv->has("pitch_step_deg")))
        cfg.optimizer.pitch_step = 3.0 * cfg.optimizer.min_step;
      return run_optimize(cfg, algorithm, noise, output);
    }
    if (simulate->parsed())
      return run_simulate(cfg, sim_beta, sim_thrust, sim_duration, sim_every,
                          output);
  } catch (const pitchopt::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const pitchopt::NoSettleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
