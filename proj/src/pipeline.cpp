// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "rcslab/pipeline.hpp"

#include <algorithm>
#include <functional>

#include "rcslab/error.hpp"
#include "rcslab/scatter_sim.hpp"
#include "rcslab/units.hpp"

namespace rcslab::pipeline {
namespace {

using nlohmann::json;

std::filesystem::path resolve(const std::filesystem::path& p, const std::filesystem::path& base) {
  if (p.empty() || p.is_absolute() || base.empty()) return p;
  return base / p;
}

struct Inputs {
  AzimuthScan scan;
  AzimuthScan sphere;
  std::optional<AzimuthScan> background;
  std::optional<AzimuthScan> sphere_background;
};

// Everything a stage may read or update.
struct Work {
  Inputs in;
  std::vector<gating::TimeProfile> scan_profiles;
  std::vector<gating::TimeProfile> sphere_profiles;
  cal::CalibrationReference calibration;
};

io::Scene sphere_scene(const io::Scene& scene, double radius_m) {
  io::Scene s = scene;
  s.target = sim::TargetModel{"calibration sphere", {}, mie::SphereSpec{radius_m}};
  s.geometry.azimuth_start_deg = 0.0;
  s.geometry.azimuth_stop_deg = 0.0;
  return s;
}

void simulate_inputs(const PipelineConfig& cfg, Inputs& in) {
  io::Scene scene = *cfg.scene;
  if (cfg.seed) scene.artifacts.seed = *cfg.seed;
  in.scan = sim::synth_scan(scene.target, scene.geometry, scene.sweep, scene.artifacts);
  const io::Scene sphere = sphere_scene(scene, cfg.sphere_radius_m);
  in.sphere = sim::synth_scan(sphere.target, sphere.geometry, sphere.sweep, sphere.artifacts,
                              sim::NoiseStream::kSphere);
}

void load_backgrounds(const PipelineConfig& cfg, Inputs& in) {
  if (cfg.scene) {
    io::Scene scene = *cfg.scene;
    if (cfg.seed) scene.artifacts.seed = *cfg.seed;
    in.background = sim::synth_background_scan(scene.geometry, scene.sweep, scene.artifacts);
    in.sphere_background = in.background;
    return;
  }
  in.background = io::read_scan_csv(cfg.background);
  in.sphere_background = cfg.sphere_background ? io::read_scan_csv(*cfg.sphere_background)
                                               : in.background;
}

// A background with a different look count than its scan is collapsed to
// its coherent mean and applied to every look.
AzimuthScan matched_background(const AzimuthScan& scan, const AzimuthScan& background) {
  if (background.size() == scan.size() || background.size() == 1) return background;
  AzimuthScan b;
  b.angles_deg = {0.0};
  b.sweeps = {cal::coherent_mean(background)};
  return b;
}

AzimuthScan subtract(const AzimuthScan& scan, const AzimuthScan& background) {
  const AzimuthScan bg = matched_background(scan, background);
  AzimuthScan out;
  out.angles_deg = scan.angles_deg;
  for (std::size_t i = 0; i < scan.size(); ++i) {
    out.sweeps.push_back(
        gating::background_subtract(scan.sweeps[i], bg.sweeps[bg.size() == 1 ? 0 : i]));
  }
  return out;
}

std::vector<gating::TimeProfile> profiles_of(const AzimuthScan& scan, std::size_t pad) {
  std::vector<gating::TimeProfile> out;
  out.reserve(scan.size());
  for (const auto& s : scan.sweeps) out.push_back(gating::to_time_domain(s, pad));
  return out;
}

double gate_profiles(std::vector<gating::TimeProfile>& profiles, const gating::GateSpec& gate) {
  double before = 0.0;
  double after = 0.0;
  for (auto& p : profiles) {
    before += gating::energy(p);
    p = gating::range_gate(p, gate.start_s, gate.stop_s, gate.alpha);
    after += gating::energy(p);
  }
  return before > 0.0 ? after / before : 0.0;
}

AzimuthScan sweeps_of(const std::vector<gating::TimeProfile>& profiles,
                      const std::vector<double>& angles) {
  AzimuthScan out;
  out.angles_deg = angles;
  for (const auto& p : profiles) out.sweeps.push_back(gating::to_frequency_domain(p, p.n_freq));
  return out;
}

json pattern_stats(const cal::RcsPattern& p, const cal::AverageRcs& avg) {
  const auto [lo, hi] = std::minmax_element(p.rcs_m2.begin(), p.rcs_m2.end());
  return {{"n_angles", p.rcs_m2.size()},
          {"freq_label", p.freq_label},
          {"mean_m2", avg.mean_m2},
          {"mean_dbsm", to_dbsm_clamped(avg.mean_m2)},
          {"min_m2", *lo},
          {"max_m2", *hi},
          {"min_dbsm", to_dbsm_clamped(*lo)},
          {"max_dbsm", to_dbsm_clamped(*hi)}};
}

}  // namespace

PipelineConfig PipelineConfig::from_json(const json& j, const std::filesystem::path& base_dir) {
  try {
    PipelineConfig c;
    if (j.contains("scene")) {
      const json& s = j.at("scene");
      c.scene = s.is_string() ? io::read_scene(resolve(s.get<std::string>(), base_dir))
                              : io::scene_from_json(s);
    } else {
      c.scan = resolve(j.at("scan").get<std::string>(), base_dir);
      c.background = resolve(j.at("background").get<std::string>(), base_dir);
      c.sphere_scan = resolve(j.at("sphere_scan").get<std::string>(), base_dir);
      if (j.contains("sphere_background")) {
        c.sphere_background = resolve(j.at("sphere_background").get<std::string>(), base_dir);
      }
    }
    c.sphere_radius_m = j.value("sphere_radius_m", c.sphere_radius_m);
    const json& g = j.at("gate");
    c.gate.start_s = g.at("start_s").get<double>();
    c.gate.stop_s = g.at("stop_s").get<double>();
    c.gate.alpha = g.value("alpha", c.gate.alpha);
    c.gate.zero_pad_factor = g.value("zero_pad_factor", c.gate.zero_pad_factor);
    if (j.contains("order")) c.order = gating::parse_order(j.at("order").get<std::string>());
    const auto band = j.at("band_hz").get<std::vector<double>>();
    if (band.size() != 2) throw FormatError("band_hz must hold [low, high]");
    c.band_lo_hz = band[0];
    c.band_hi_hz = band[1];
    if (j.contains("models")) {
      c.models.clear();
      for (const auto& m : j.at("models")) c.models.push_back(stats::parse_family(m.get<std::string>()));
    }
    if (j.contains("out_dir")) c.out_dir = resolve(j.at("out_dir").get<std::string>(), base_dir);
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    return c;
  } catch (const json::exception& e) {
    throw FormatError(std::string("pipeline config: ") + e.what());
  }
}

void PipelineConfig::validate() const {
  gate.validate();
  if (!(sphere_radius_m > 0.0)) throw DomainError("sphere radius must be > 0");
  if (!(band_hi_hz >= band_lo_hz) || !(band_lo_hz > 0.0)) {
    throw DomainError("band must satisfy 0 < low <= high");
  }
  if (models.empty()) throw DomainError("model list is empty");
}

json RunReport::to_json(const PipelineConfig& config) const {
  json stage_list = json::array();
  for (const auto& s : stages) stage_list.push_back({{"name", s.name}, {"summary", s.summary}});

  json models = json::array();
  for (auto f : config.models) models.push_back(stats::family_name(f));
  json j{{"status", ok ? "ok" : "failed"},
         {"stages", stage_list},
         {"config",
          {{"source", config.scene ? "simulated" : "files"},
           {"sphere_radius_m", config.sphere_radius_m},
           {"gate",
            {{"start_s", config.gate.start_s},
             {"stop_s", config.gate.stop_s},
             {"alpha", config.gate.alpha},
             {"zero_pad_factor", config.gate.zero_pad_factor}}},
           {"order", gating::order_name(config.order)},
           {"band_hz", {config.band_lo_hz, config.band_hi_hz}},
           {"models", models}}}};
  if (config.seed) j["config"]["seed"] = *config.seed;
  if (!ok) {
    j["failed_stage"] = failed_stage;
    j["error"] = error;
  }
  if (ok || !stages.empty()) {
    j["gate_energy_ratio"] = gate_energy_ratio;
    j["calibration_region_warning"] = region_warning;
  }
  if (pattern && average) j["pattern"] = pattern_stats(*pattern, *average);
  if (ranking) j["fit"] = io::ranking_to_json(*ranking, pattern ? pattern->rcs_m2.size() : 0);
  return j;
}

RunReport run_stages(const PipelineConfig& config) {
  RunReport report;
  Work w;

  // Runs one stage; returns false (and records the failure) on error.
  const auto stage = [&](const std::string& name, const std::function<json()>& body) {
    report.stages.push_back({name, json::object()});
    try {
      report.stages.back().summary = body();
      return true;
    } catch (const std::exception& e) {
      report.failed_stage = name;
      report.error = e.what();
      report.stages.back().summary = {{"error", e.what()}};
      return false;
    }
  };

  const auto ingest = [&] {
    config.validate();
    if (config.scene) {
      simulate_inputs(config, w.in);
    } else {
      w.in.scan = io::read_scan_csv(config.scan);
      w.in.sphere = io::read_scan_csv(config.sphere_scan);
    }
    return json{{"source", config.scene ? "simulated" : "files"},
                {"n_angles", w.in.scan.size()},
                {"n_freq", w.in.scan.sweeps.front().size()},
                {"sphere_looks", w.in.sphere.size()}};
  };
  const auto subtract_stage = [&] {
    load_backgrounds(config, w.in);
    if (w.scan_profiles.empty()) {
      w.in.scan = subtract(w.in.scan, *w.in.background);
      w.in.sphere = subtract(w.in.sphere, *w.in.sphere_background);
    } else {
      // Gate-first order: the backgrounds go through the same gate.
      const auto gated_bg = [&](const AzimuthScan& bg) {
        auto p = profiles_of(bg, config.gate.zero_pad_factor);
        gate_profiles(p, config.gate);
        return sweeps_of(p, bg.angles_deg);
      };
      w.in.scan = subtract(w.in.scan, gated_bg(*w.in.background));
      w.in.sphere = subtract(w.in.sphere, gated_bg(*w.in.sphere_background));
    }
    return json{{"background_looks", w.in.background->size()},
                {"sphere_background_looks", w.in.sphere_background->size()}};
  };
  const auto time_stage = [&] {
    w.scan_profiles = profiles_of(w.in.scan, config.gate.zero_pad_factor);
    w.sphere_profiles = profiles_of(w.in.sphere, config.gate.zero_pad_factor);
    const auto& p = w.scan_profiles.front();
    return json{{"n_time", p.size()}, {"time_step_s", p.time_step()},
                {"zero_pad_factor", p.zero_pad_factor}};
  };
  const auto gate_stage = [&] {
    report.gate_energy_ratio = gate_profiles(w.scan_profiles, config.gate);
    const double sphere_ratio = gate_profiles(w.sphere_profiles, config.gate);
    return json{{"gate_energy_ratio", report.gate_energy_ratio},
                {"sphere_gate_energy_ratio", sphere_ratio}};
  };
  const auto freq_stage = [&] {
    w.in.scan = sweeps_of(w.scan_profiles, w.in.scan.angles_deg);
    w.in.sphere = sweeps_of(w.sphere_profiles, w.in.sphere.angles_deg);
    return json{{"n_freq", w.in.scan.sweeps.front().size()}};
  };
  const auto cal_stage = [&] {
    w.calibration = cal::build_calibration(cal::coherent_mean(w.in.sphere),
                                           mie::SphereSpec{config.sphere_radius_m});
    report.region_warning = w.calibration.region_warning;
    const auto [lo, hi] = std::minmax_element(w.calibration.factor.begin(), w.calibration.factor.end());
    return json{{"region_warning", w.calibration.region_warning},
                {"factor_min", *lo},
                {"factor_max", *hi}};
  };
  const auto pattern_stage = [&] {
    report.pattern = cal::pattern_from_scan(w.in.scan, w.calibration, config.band_lo_hz,
                                            config.band_hi_hz);
    return json{{"n_angles", report.pattern->rcs_m2.size()},
                {"freq_label", report.pattern->freq_label}};
  };
  const auto average_stage = [&] {
    report.average = cal::average_rcs(*report.pattern);
    return json{{"mean_m2", report.average->mean_m2},
                {"mean_dbsm", to_dbsm_clamped(report.average->mean_m2)}};
  };
  const auto fit_stage = [&] {
    report.ranking = stats::select_model(stats::RcsSamples(report.pattern->rcs_m2), config.models);
    return json{{"best", report.ranking->best().name()},
                {"fitted", report.ranking->results.size()},
                {"skipped", report.ranking->skipped.size()}};
  };

  std::vector<std::pair<std::string, std::function<json()>>> plan{{"ingest", ingest}};
  if (config.order == gating::Order::kSubtractThenGate) {
    plan.insert(plan.end(), {{"background_subtract", subtract_stage},
                             {"to_time_domain", time_stage},
                             {"range_gate", gate_stage},
                             {"to_frequency_domain", freq_stage}});
  } else {
    plan.insert(plan.end(), {{"to_time_domain", time_stage},
                             {"range_gate", gate_stage},
                             {"to_frequency_domain", freq_stage},
                             {"background_subtract", subtract_stage}});
  }
  plan.insert(plan.end(), {{"calibration", cal_stage},
                           {"pattern", pattern_stage},
                           {"average", average_stage},
                           {"fit", fit_stage}});

  for (const auto& [name, body] : plan) {
    if (!stage(name, body)) return report;
  }
  report.ok = true;
  return report;
}

RunReport run_pipeline(const PipelineConfig& config) {
  RunReport report = run_stages(config);
  const auto pattern_path = config.out_dir / "pattern.csv";
  const auto plot_path = config.out_dir / "plot.csv";
  const auto report_path = config.out_dir / "report.json";
  std::filesystem::create_directories(config.out_dir);
  std::filesystem::remove(pattern_path);
  std::filesystem::remove(plot_path);
  if (report.ok) {
    try {
      io::write_pattern_csv(pattern_path, *report.pattern);
      io::write_plot_data(plot_path, *report.pattern);
    } catch (const std::exception& e) {
      std::filesystem::remove(pattern_path);
      std::filesystem::remove(plot_path);
      report.ok = false;
      report.failed_stage = "emit";
      report.error = e.what();
      report.stages.push_back({"emit", {{"error", e.what()}}});
    }
    if (report.ok) {
      report.stages.push_back({"emit", {{"files", {"pattern.csv", "plot.csv", "report.json"}}}});
    }
  }
  io::write_json(report_path, report.to_json(config));
  return report;
}

}  // namespace rcslab::pipeline
