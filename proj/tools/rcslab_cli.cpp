// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

// rcslab command-line front end. Subcommands mirror the processing stages;
// `process` runs all of them from one JSON config.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rcslab/calibration.hpp"
#include "rcslab/error.hpp"
#include "rcslab/gating.hpp"
#include "rcslab/io.hpp"
#include "rcslab/mie.hpp"
#include "rcslab/pipeline.hpp"
#include "rcslab/scatter_sim.hpp"
#include "rcslab/stats.hpp"

namespace fs = std::filesystem;
using namespace rcslab;

namespace {

const std::vector<std::string> kSubcommands{"sphere-rcs", "simulate", "gate",     "calibrate",
                                            "fit",        "process",  "plot-data"};

std::string config_value(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ',';
      out += config_value(e);
    }
    return out;
  }
  return v.dump();
}

// For every subcommand except `process`, `--config` names a JSON file whose
// object under the subcommand's name supplies options missing from argv,
// e.g. {"gate": {"alpha": 0.5}}. They are spliced into argv before parsing.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  std::string sub;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
    if (sub.empty() && std::find(kSubcommands.begin(), kSubcommands.end(), args[i]) != kSubcommands.end()) {
      sub = args[i];
    }
  }
  if (config_path.empty() || sub.empty() || sub == "process") return args;
  const auto j = io::read_json(config_path);
  if (!j.contains(sub)) return args;
  for (const auto& [key, value] : j.at(sub).items()) {
    const std::string flag = "--" + key;
    bool present = false;
    for (const auto& a : args) present = present || a == flag || a.rfind(flag + "=", 0) == 0;
    if (!present) {
      args.push_back(flag);
      args.push_back(config_value(value));
    }
  }
  return args;
}

fs::path under(const fs::path& out_dir, const fs::path& p) {
  if (out_dir.empty() || p.is_absolute()) return p;
  return out_dir / p;
}

std::pair<double, double> parse_band(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const double f = std::stod(s);
    return {f, f};
  }
  return {std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
}

std::vector<stats::Family> parse_models(const std::string& list) {
  std::vector<stats::Family> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(stats::parse_family(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compact-range RCS measurement processing"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  app.add_option("--config", config_path, "JSON config (pipeline config for `process`)");
  app.add_option("--seed", seed, "RNG seed override");
  app.add_option("--out-dir", out_dir, "Directory for relative output paths");

  // sphere-rcs
  auto* sphere_cmd = app.add_subcommand("sphere-rcs", "PEC sphere RCS versus frequency");
  double radius = 0.0;
  double f_start = 0.0;
  double f_stop = 0.0;
  std::size_t points = 0;
  std::string model = "exact";
  std::string sphere_out;
  sphere_cmd->add_option("--radius", radius, "Sphere radius [m]")->required();
  sphere_cmd->add_option("--freq-start", f_start, "First frequency [Hz]")->required();
  sphere_cmd->add_option("--freq-stop", f_stop, "Last frequency [Hz]")->required();
  sphere_cmd->add_option("--points", points, "Number of frequencies")->required()->check(CLI::PositiveNumber);
  sphere_cmd->add_option("--model", model, "exact|rayleigh|optical")
      ->check(CLI::IsMember({"exact", "rayleigh", "optical"}));
  sphere_cmd->add_option("--out", sphere_out, "Output CSV (default stdout)");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Synthesize a chamber azimuth scan");
  std::string scene_path;
  std::string sim_out;
  std::string bg_out;
  sim_cmd->add_option("--scene", scene_path, "Scene JSON")->required();
  sim_cmd->add_option("--out", sim_out, "Scan CSV")->required();
  sim_cmd->add_option("--background-out", bg_out, "Empty-chamber scan CSV");

  // gate
  auto* gate_cmd = app.add_subcommand("gate", "Background subtraction and time-domain gating");
  std::string gate_in;
  std::string gate_bg;
  std::string gate_out;
  gating::GateSpec gate;
  std::string order = "subtract-then-gate";
  gate_cmd->add_option("--in", gate_in, "Scan CSV")->required();
  gate_cmd->add_option("--background", gate_bg, "Background scan CSV");
  gate_cmd->add_option("--gate-start", gate.start_s, "Gate start [s, two-way]")->required();
  gate_cmd->add_option("--gate-stop", gate.stop_s, "Gate stop [s, two-way]")->required();
  gate_cmd->add_option("--alpha", gate.alpha, "Tukey taper fraction")->check(CLI::Range(0.0, 1.0));
  gate_cmd->add_option("--zero-pad", gate.zero_pad_factor, "Zero-padding factor")->check(CLI::PositiveNumber);
  gate_cmd->add_option("--order", order, "subtract-then-gate|gate-then-subtract");
  gate_cmd->add_option("--out", gate_out, "Gated scan CSV")->required();

  // calibrate
  auto* cal_cmd = app.add_subcommand("calibrate", "Sphere calibration to an RCS pattern");
  std::string cal_scan;
  std::string cal_sphere;
  double cal_radius = 0.0;
  std::string band;
  std::string cal_out;
  cal_cmd->add_option("--scan", cal_scan, "Gated target scan CSV")->required();
  cal_cmd->add_option("--sphere", cal_sphere, "Gated sphere scan CSV")->required();
  cal_cmd->add_option("--radius", cal_radius, "Sphere radius [m]")->required();
  cal_cmd->add_option("--band", band, "Band f1:f2 [Hz]")->required();
  cal_cmd->add_option("--out", cal_out, "Pattern CSV")->required();

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "Fit RCS distributions and rank by AIC");
  std::string fit_pattern;
  std::string models = "lognormal,rayleigh,gev";
  std::string fit_out;
  fit_cmd->add_option("--pattern", fit_pattern, "Pattern CSV")->required();
  fit_cmd->add_option("--models", models, "Comma-separated families");
  fit_cmd->add_option("--out", fit_out, "Report JSON")->required();

  // process
  auto* process_cmd = app.add_subcommand("process", "Run the full pipeline from --config");

  // plot-data
  auto* plot_cmd = app.add_subcommand("plot-data", "Polar plot data from a pattern");
  std::string plot_pattern;
  std::string plot_out;
  plot_cmd->add_option("--pattern", plot_pattern, "Pattern CSV")->required();
  plot_cmd->add_option("--out", plot_out, "Plot-data CSV")->required();

  try {
    auto args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*sphere_cmd) {
      const mie::SphereSpec sphere{radius};
      std::vector<io::SphereRcsRow> rows;
      for (std::size_t i = 0; i < points; ++i) {
        const double f = points == 1 ? f_start
                                     : f_start + (f_stop - f_start) * static_cast<double>(i) /
                                                     static_cast<double>(points - 1);
        double rcs = 0.0;
        if (model == "exact") rcs = mie::sphere_rcs_exact(sphere, f);
        else if (model == "rayleigh") rcs = mie::sphere_rcs_rayleigh(sphere, f);
        else rcs = mie::sphere_rcs_optical(sphere);
        rows.push_back({f, rcs, mie::classify_region(sphere, f)});
      }
      if (sphere_out.empty()) {
        io::write_sphere_rcs_csv(std::cout, rows);
      } else {
        const auto path = under(out_dir, sphere_out);
        if (path.has_parent_path()) fs::create_directories(path.parent_path());
        std::ofstream os(path);
        if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
        io::write_sphere_rcs_csv(os, rows);
      }
    } else if (*sim_cmd) {
      io::Scene scene = io::read_scene(scene_path);
      if (seed) scene.artifacts.seed = *seed;
      io::write_scan_csv(under(out_dir, sim_out),
                         sim::synth_scan(scene.target, scene.geometry, scene.sweep, scene.artifacts));
      if (!bg_out.empty()) {
        io::write_scan_csv(under(out_dir, bg_out),
                           sim::synth_background_scan(scene.geometry, scene.sweep, scene.artifacts));
      }
    } else if (*gate_cmd) {
      const auto scan = io::read_scan_csv(fs::path(gate_in));
      std::optional<AzimuthScan> bg;
      if (!gate_bg.empty()) bg = io::read_scan_csv(fs::path(gate_bg));
      const auto gated = gating::process_scan(scan, bg ? &*bg : nullptr, gate, gating::parse_order(order));
      io::write_scan_csv(under(out_dir, gate_out), gated.scan);
      std::cerr << "gate energy ratio: " << gated.gate_energy_ratio << '\n';
    } else if (*cal_cmd) {
      const auto scan = io::read_scan_csv(fs::path(cal_scan));
      const auto sphere = io::read_scan_csv(fs::path(cal_sphere));
      const auto reference = cal::build_calibration(cal::coherent_mean(sphere), mie::SphereSpec{cal_radius});
      if (reference.region_warning) {
        std::cerr << "warning: calibration sphere is outside the optical region on part of the grid\n";
      }
      const auto [lo, hi] = parse_band(band);
      io::write_pattern_csv(under(out_dir, cal_out), cal::pattern_from_scan(scan, reference, lo, hi));
    } else if (*fit_cmd) {
      const auto pattern = io::read_pattern_csv(fs::path(fit_pattern));
      const auto families = parse_models(models);
      const auto ranking = stats::select_model(stats::RcsSamples(pattern.rcs_m2), families);
      io::write_json(under(out_dir, fit_out), io::ranking_to_json(ranking, pattern.rcs_m2.size()));
    } else if (*plot_cmd) {
      io::write_plot_data(under(out_dir, plot_out), io::read_pattern_csv(fs::path(plot_pattern)));
    } else if (*process_cmd) {
      if (config_path.empty()) throw DomainError("process requires --config");
      const fs::path cfg_path(config_path);
      auto config = pipeline::PipelineConfig::from_json(io::read_json(cfg_path), cfg_path.parent_path());
      if (seed) config.seed = seed;
      if (!out_dir.empty()) config.out_dir = out_dir;
      const auto report = pipeline::run_pipeline(config);
      if (!report.ok) {
        std::cerr << "error: stage '" << report.failed_stage << "' failed: " << report.error << '\n';
        return 1;
      }
      std::cout << "mean RCS " << report.average->mean_m2 << " m^2 ("
                << report.average->mean_dbsm << " dBsm), best model "
                << report.ranking->best().name() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
