// Copyright 2026 The Legsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "legsim/config.h"
#include "legsim/gaits.h"
#include "legsim/log_io.h"
#include "legsim/metrics.h"
#include "legsim/sim.h"
#include "legsim/svg.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliOptions {
  std::string config;
  std::string out = ".";
  bool plots = false;
  bool dry_run = false;
  unsigned seed = 0;
  double noise = 0.0;
  std::vector<std::string> inputs;
};

legsim::LoadedConfig load_or_default(const std::string& path) {
  if (path.empty()) {
    return legsim::parse_config(legsim::default_config_text(), "<builtin>");
  }
  return legsim::load_config(path);
}

void ensure_out(const std::string& out) {
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec || !fs::is_directory(out)) {
    throw legsim::ConfigError("output directory not writable: " + out);
  }
}

std::vector<double> column(const std::vector<legsim::LogSample>& samples,
                           double (*get)(const legsim::LogSample&)) {
  std::vector<double> v;
  v.reserve(samples.size());
  for (const auto& s : samples) v.push_back(get(s));
  return v;
}

void write_plots(const legsim::TrajectoryLog& log, const std::string& out) {
  using legsim::LogSample;
  const auto t = column(log.samples, [](const LogSample& s) { return s.t; });

  legsim::SvgPlot com_plot("Mass-center trajectory", "x [m]", "y [m]");
  com_plot.add_line(
      column(log.samples, [](const LogSample& s) { return s.com.x(); }),
      column(log.samples, [](const LogSample& s) { return s.com.y(); }),
      "#1f77b4", "com");
  legsim::write_file(out + "/com_xy.svg", com_plot.render());

  legsim::SvgPlot speed_plot("Mass-center speed", "t [s]", "speed [m/s]");
  speed_plot.add_line(
      t, column(log.samples, [](const LogSample& s) { return s.vcom.norm(); }),
      "#1f77b4", "|v|");
  if (log.summary.took_off) {
    speed_plot.add_vline(log.summary.t_takeoff, "#888888");
  }
  legsim::write_file(out + "/speed.svg", speed_plot.render());

  legsim::SvgPlot pitch_plot("Pitch angle", "t [s]", "pitch [deg]");
  pitch_plot.add_line(t,
                      column(log.samples,
                             [](const LogSample& s) {
                               return legsim::rad2deg(s.q[2]);
                             }),
                      "#d62728", "pitch");
  if (log.summary.took_off) {
    pitch_plot.add_vline(log.summary.t_takeoff, "#888888");
  }
  legsim::write_file(out + "/pitch.svg", pitch_plot.render());

  legsim::SvgPlot joints("Joint positions", "t [s]", "angle [deg]");
  joints.add_line(t,
                  column(log.samples,
                         [](const LogSample& s) {
                           return legsim::rad2deg(s.q[3]);
                         }),
                  "#2ca02c", "hip");
  joints.add_line(t,
                  column(log.samples,
                         [](const LogSample& s) {
                           return legsim::rad2deg(s.q[4]);
                         }),
                  "#9467bd", "ankle");
  legsim::write_file(out + "/joints.svg", joints.render());

  legsim::SvgPlot rates("Joint velocities", "t [s]", "rate [deg/s]");
  rates.add_line(t,
                 column(log.samples,
                        [](const LogSample& s) {
                          return legsim::rad2deg(s.qd[3]);
                        }),
                 "#2ca02c", "hip");
  rates.add_line(t,
                 column(log.samples,
                        [](const LogSample& s) {
                          return legsim::rad2deg(s.qd[4]);
                        }),
                 "#9467bd", "ankle");
  legsim::write_file(out + "/joint_rates.svg", rates.render());
}

json summary_json(const legsim::TrajectoryLog& log,
                  const legsim::Scenario& sc) {
  const legsim::TakeoffSummary& s = log.summary;
  json j;
  j["took_off"] = s.took_off;
  j["takeoff_time_s"] = s.t_takeoff;
  j["takeoff_speed_m_s"] = s.takeoff_speed;
  j["takeoff_velocity_m_s"] = {s.takeoff_velocity.x(), s.takeoff_velocity.y()};
  j["pitch_at_takeoff_deg"] = legsim::rad2deg(s.pitch_at_takeoff);
  j["pitch_rate_at_takeoff_rad_s"] = s.pitch_rate_at_takeoff;
  j["peak_joint_speed_deg_s"] = legsim::rad2deg(s.peak_joint_speed);
  j["peak_torque_Nm"] = s.peak_torque;
  j["max_toe_deflection_deg"] = legsim::rad2deg(s.max_toe_deflection);
  j["E_mech_at_takeoff_J"] = s.energy_at_takeoff;
  j["apex_com_height_m"] = s.apex_com_height;
  const double m = sc.params.total_mass();
  if (s.took_off) {
    const double e_out = legsim::energy_output(m, s.takeoff_speed,
                                               s.com_height_at_takeoff);
    j["E_out_at_takeoff_J"] = e_out;
    if (s.energy_at_takeoff > 0) {
      j["eta_mech"] = legsim::efficiency(e_out, s.energy_at_takeoff);
    }
    j["froude_at_takeoff"] =
        legsim::froude(s.takeoff_speed, sc.params.l1 + sc.params.l2);
    j["gear_ratio_bound"] = legsim::gear_ratio_bound(
        sc.params.motor_max_speed, s.peak_joint_speed);
  }
  return j;
}

int cmd_simulate(const CliOptions& opt) {
  const legsim::LoadedConfig cfg = load_or_default(opt.config);
  if (opt.dry_run) {
    std::cout << "config ok\n";
    return 0;
  }
  ensure_out(opt.out);
  legsim::TrajectoryLog log = legsim::run_takeoff(cfg.scenario);
  if (log.find(legsim::EventKind::kTakeOff)) {
    log = legsim::run_flight(std::move(log), cfg.scenario);
  }
  legsim::write_file(opt.out + "/trajectory.csv", legsim::trajectory_csv(log));
  legsim::write_file(opt.out + "/events.csv", legsim::events_csv(log));
  const json j = summary_json(log, cfg.scenario);
  legsim::write_file(opt.out + "/summary.json", j.dump(2) + "\n");
  if (opt.plots) write_plots(log, opt.out);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_gait(const CliOptions& opt) {
  const legsim::LoadedConfig cfg = load_or_default(opt.config);
  if (opt.dry_run) {
    std::cout << "config ok\n";
    return 0;
  }
  ensure_out(opt.out);
  const legsim::FootTrajectory traj =
      legsim::gen_trajectory(cfg.gait.mode, cfg.gait, cfg.scenario.params);
  const legsim::JointReference ref =
      legsim::gait_to_joint_commands(traj, cfg.scenario.params, cfg.gait);

  // Foot path sampled at the command rate.
  std::string foot = legsim::kXyHeader;
  foot.push_back('\n');
  const double dt = 1.0 / cfg.gait.sample_rate;
  for (double t = 0.0; t <= traj.total_duration() + 1e-12; t += dt) {
    const legsim::Vec2 p = traj.sample(t);
    foot += legsim::format_double(t) + "," + legsim::format_double(p.x()) +
            "," + legsim::format_double(p.y()) + "\n";
  }
  legsim::write_file(opt.out + "/foot_path.csv", foot);
  legsim::write_file(opt.out + "/joint_reference.csv",
                     legsim::joint_reference_csv(ref));

  double peak_rate = 0.0;
  for (size_t i = 0; i < ref.size(); ++i) {
    peak_rate = std::max({peak_rate, std::abs(ref.hip_vel[i]),
                          std::abs(ref.ankle_vel[i])});
  }
  json j;
  j["mode"] = legsim::to_string(cfg.gait.mode);
  j["duration_s"] = traj.total_duration();
  j["samples"] = ref.size();
  j["peak_joint_rate_deg_s"] = legsim::rad2deg(peak_rate);
  j["joint_rate_limit_deg_s"] = legsim::rad2deg(
      cfg.scenario.params.motor_max_speed / cfg.scenario.params.gear_ratio);
  legsim::write_file(opt.out + "/gait_summary.json", j.dump(2) + "\n");
  if (opt.plots) {
    legsim::SvgPlot plot("Foot path (" +
                             std::string(legsim::to_string(cfg.gait.mode)) +
                             ")",
                         "x [m]", "y [m]");
    std::vector<double> xs, ys;
    for (double t = 0.0; t <= traj.total_duration() + 1e-12; t += dt) {
      const legsim::Vec2 p = traj.sample(t);
      xs.push_back(p.x());
      ys.push_back(p.y());
    }
    plot.add_line(xs, ys, "#1f77b4", "foot");
    legsim::write_file(opt.out + "/foot_path.svg", plot.render());
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

json metrics_for_file(const std::string& path, const legsim::RobotParams& p) {
  const std::string text = legsim::read_file(path);
  json j;
  j["file"] = path;
  switch (legsim::sniff_csv(text)) {
    case legsim::CsvKind::kPower: {
      const auto series = legsim::read_power_csv(text);
      j["kind"] = "electrical_power";
      j["E_elec_J"] = legsim::energy_input(series);
      j["duration_s"] = series.back().t - series.front().t;
      break;
    }
    case legsim::CsvKind::kTrajectory: {
      const auto samples = legsim::read_trajectory_csv(text);
      j["kind"] = "sim_trajectory";
      std::vector<legsim::PowerSample> mech;
      mech.reserve(samples.size());
      for (const auto& s : samples) mech.push_back({s.t, s.power});
      j["E_mech_J"] = legsim::energy_input(mech);
      const legsim::LogSample* takeoff = nullptr;
      for (const auto& s : samples) {
        if (s.mode == legsim::ContactMode::kAirborne) {
          takeoff = &s;
          break;
        }
      }
      if (takeoff) {
        const double v = takeoff->vcom.norm();
        const double h = takeoff->com.y() - samples.front().com.y();
        const double e_out = legsim::energy_output(p.total_mass(), v, h);
        j["takeoff_time_s"] = takeoff->t;
        j["takeoff_speed_m_s"] = v;
        j["E_mech_at_takeoff_J"] = takeoff->energy;
        j["E_out_J"] = e_out;
        if (takeoff->energy > 0) {
          j["eta_mech"] = legsim::efficiency(e_out, takeoff->energy);
        }
        j["froude_at_takeoff"] = legsim::froude(v, p.l1 + p.l2);
      }
      break;
    }
    case legsim::CsvKind::kSpeed: {
      const auto series = legsim::read_speed_csv(text);
      j["kind"] = "speed_series";
      const double t_end = series.t.back();
      j["final_speed_m_s"] = series.v.back();
      j["max_speed_m_s"] = *std::max_element(series.v.begin(), series.v.end());
      j["avg_acceleration_m_s2"] =
          legsim::average_acceleration(series, t_end);
      j["duration_s"] = t_end - series.t.front();
      break;
    }
    case legsim::CsvKind::kXy: {
      const auto series = legsim::read_xy_csv(text);
      j["kind"] = "trajectory_xy";
      j["mean_forward_speed_m_s"] = legsim::mean_forward_speed(series);
      j["horizontal_range_m"] = legsim::horizontal_range(series);
      j["vertical_range_m"] = legsim::vertical_range(series);
      break;
    }
    default:
      throw legsim::ConfigError("unrecognized csv header in " + path);
  }
  return j;
}

int cmd_metrics(const CliOptions& opt) {
  if (opt.inputs.empty()) {
    throw legsim::ConfigError("metrics requires at least one input file");
  }
  legsim::RobotParams params;
  if (!opt.config.empty()) {
    params = load_or_default(opt.config).scenario.params;
  }
  ensure_out(opt.out);
  json all = json::array();
  std::string csv = "file,key,value\n";
  for (const std::string& f : opt.inputs) {
    const json j = metrics_for_file(f, params);
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "file" || it.key() == "kind") continue;
      if (it.value().is_number()) {
        csv += f + "," + it.key() + "," +
               legsim::format_double(it.value().get<double>()) + "\n";
      }
    }
    all.push_back(j);
  }
  legsim::write_file(opt.out + "/metrics.json", all.dump(2) + "\n");
  legsim::write_file(opt.out + "/metrics.csv", csv);
  std::cout << all.dump(2) << "\n";
  return 0;
}

int cmd_fit(const CliOptions& opt) {
  if (opt.inputs.size() != 1) {
    throw legsim::ConfigError("fit requires exactly one input csv");
  }
  auto pairs = legsim::read_mass_pairs_csv(legsim::read_file(opt.inputs[0]));
  if (opt.noise > 0.0) {
    std::mt19937 rng(opt.seed);
    std::normal_distribution<double> dist(0.0, opt.noise);
    for (auto& [mb, ml] : pairs) ml *= 1.0 + dist(rng);
  }
  const legsim::AllometryFit fit = legsim::fit_allometry(pairs);
  json j;
  j["a"] = fit.a;
  j["b"] = fit.b;
  j["r2"] = fit.r2;
  j["n"] = pairs.size();
  ensure_out(opt.out);
  legsim::write_file(opt.out + "/fit.json", j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_sweep(const CliOptions& opt) {
  const legsim::LoadedConfig cfg = load_or_default(opt.config);
  if (cfg.sweep_axes.empty()) {
    throw legsim::ConfigError("config has no [sweep] axes");
  }
  if (opt.dry_run) {
    std::cout << "config ok\n";
    return 0;
  }
  ensure_out(opt.out);
  const auto cells =
      legsim::sweep(cfg.scenario, cfg.sweep_axes, cfg.sweep_parallel);

  std::string csv;
  for (const auto& axis : cfg.sweep_axes) csv += axis.key + ",";
  csv +=
      "took_off,takeoff_speed_m_s,takeoff_time_s,peak_joint_speed_deg_s,"
      "peak_torque_Nm,E_mech_at_takeoff_J,feasible,error\n";
  for (const auto& cell : cells) {
    for (const auto& [key, value] : cell.overrides) {
      csv += legsim::format_double(value) + ",";
    }
    const auto& s = cell.summary;
    csv += (s.took_off ? "1" : "0");
    csv += "," + legsim::format_double(s.takeoff_speed);
    csv += "," + legsim::format_double(s.t_takeoff);
    csv += "," + legsim::format_double(legsim::rad2deg(s.peak_joint_speed));
    csv += "," + legsim::format_double(s.peak_torque);
    csv += "," + legsim::format_double(s.energy_at_takeoff);
    csv += std::string(",") + (cell.feasible ? "1" : "0");
    csv += "," + cell.error + "\n";
  }
  legsim::write_file(opt.out + "/sweep.csv", csv);
  std::cout << csv;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar legged take-off simulator and metrics toolkit"};
  app.require_subcommand(1);

  CliOptions opt;
  app.add_option("--seed", opt.seed, "Seed for stochastic fixtures");

  auto add_common = [&](CLI::App* sub, bool with_config) {
    if (with_config) {
      sub->add_option("--config", opt.config, "Scenario/config file");
    }
    sub->add_option("--out", opt.out, "Output directory");
    sub->add_flag("--plots", opt.plots, "Emit SVG plots");
    sub->add_flag("--dry-run", opt.dry_run, "Validate config and exit");
  };

  CLI::App* sim = app.add_subcommand("simulate", "Run the take-off scenario");
  add_common(sim, true);
  CLI::App* gait = app.add_subcommand("gait", "Generate a foot trajectory");
  add_common(gait, true);
  CLI::App* metrics =
      app.add_subcommand("metrics", "Compute metrics from log files");
  add_common(metrics, true);
  metrics->add_option("files", opt.inputs, "Input csv files");
  CLI::App* fit = app.add_subcommand("fit", "Fit the leg-mass allometry");
  add_common(fit, false);
  fit->add_option("csv", opt.inputs, "body_mass_kg,leg_mass_kg csv");
  fit->add_option("--noise", opt.noise, "Multiplicative noise sigma");
  CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  add_common(sweep, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sim->parsed()) return cmd_simulate(opt);
    if (gait->parsed()) return cmd_gait(opt);
    if (metrics->parsed()) return cmd_metrics(opt);
    if (fit->parsed()) return cmd_fit(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
  } catch (const legsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const legsim::NumericsError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
