// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "rcslab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string_view>

#include "rcslab/error.hpp"
#include "rcslab/units.hpp"

namespace rcslab::io {
namespace {

using nlohmann::json;

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open '" + path.string() + "' for reading");
  return is;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  return os;
}

void expect_header(std::istream& is, std::string_view header) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("missing CSV header '" + std::string(header) + "'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) {
    throw FormatError("expected CSV header '" + std::string(header) + "', got '" + line + "'");
  }
}

std::vector<double> parse_row(std::string_view line, std::size_t columns, std::size_t line_no) {
  std::vector<double> out;
  out.reserve(columns);
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t comma = std::min(line.find(',', pos), line.size());
    std::string_view field = line.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\r')) field.remove_suffix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || end != field.data() + field.size()) {
      throw FormatError("line " + std::to_string(line_no) + ": bad number '" +
                        std::string(field) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  if (out.size() != columns) {
    throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                      " columns, got " + std::to_string(out.size()));
  }
  return out;
}

// Calls fn(row) for each non-empty data line.
template <typename Fn>
void for_each_row(std::istream& is, std::size_t columns, Fn&& fn) {
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    fn(parse_row(line, columns, line_no));
  }
}

sim::ScatteringCenter center_from_json(const json& j) {
  return {j.at("rcs_m2").get<double>(), j.value("x_m", 0.0), j.value("y_m", 0.0)};
}

json center_to_json(const sim::ScatteringCenter& c) {
  return {{"rcs_m2", c.rcs_m2}, {"x_m", c.x_m}, {"y_m", c.y_m}};
}

sim::DelayTone tone_from_json(const json& j) {
  return {j.value("amplitude", 0.0), j.value("delay_s", 0.0)};
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

void write_scan_csv(std::ostream& os, const AzimuthScan& scan) {
  scan.validate();
  os << "angle_deg,freq_hz,re,im\n";
  for (std::size_t a = 0; a < scan.size(); ++a) {
    const auto& s = scan.sweeps[a];
    for (std::size_t i = 0; i < s.size(); ++i) {
      os << format_real(scan.angles_deg[a]) << ',' << format_real(s.freqs_hz[i]) << ','
         << format_real(s.samples[i].real()) << ',' << format_real(s.samples[i].imag()) << '\n';
    }
  }
}

void write_scan_csv(const std::filesystem::path& path, const AzimuthScan& scan) {
  auto os = open_out(path);
  write_scan_csv(os, scan);
  if (!os) throw IoError("failed writing '" + path.string() + "'");
}

AzimuthScan read_scan_csv(std::istream& is) {
  expect_header(is, "angle_deg,freq_hz,re,im");
  AzimuthScan scan;
  for_each_row(is, 4, [&](const std::vector<double>& r) {
    if (scan.angles_deg.empty() || r[0] != scan.angles_deg.back()) {
      if (!scan.angles_deg.empty() && !(r[0] > scan.angles_deg.back())) {
        throw FormatError("scan rows are not sorted by angle");
      }
      scan.angles_deg.push_back(r[0]);
      scan.sweeps.emplace_back();
    }
    auto& s = scan.sweeps.back();
    if (!s.freqs_hz.empty() && !(r[1] > s.freqs_hz.back())) {
      throw FormatError("scan rows are not sorted by frequency within an angle");
    }
    s.freqs_hz.push_back(r[1]);
    s.samples.emplace_back(r[2], r[3]);
  });
  scan.validate();
  return scan;
}

AzimuthScan read_scan_csv(const std::filesystem::path& path) {
  auto is = open_in(path);
  try {
    return read_scan_csv(is);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_pattern_csv(std::ostream& os, const cal::RcsPattern& pattern) {
  pattern.validate();
  os << "angle_deg,rcs_m2,rcs_dbsm\n";
  for (std::size_t i = 0; i < pattern.angles_deg.size(); ++i) {
    os << format_real(pattern.angles_deg[i]) << ',' << format_real(pattern.rcs_m2[i]) << ','
       << format_real(to_dbsm_clamped(pattern.rcs_m2[i])) << '\n';
  }
}

void write_pattern_csv(const std::filesystem::path& path, const cal::RcsPattern& pattern) {
  auto os = open_out(path);
  write_pattern_csv(os, pattern);
  if (!os) throw IoError("failed writing '" + path.string() + "'");
}

cal::RcsPattern read_pattern_csv(std::istream& is) {
  expect_header(is, "angle_deg,rcs_m2,rcs_dbsm");
  cal::RcsPattern p;
  for_each_row(is, 3, [&](const std::vector<double>& r) {
    p.angles_deg.push_back(r[0]);
    p.rcs_m2.push_back(r[1]);
  });
  p.validate();
  return p;
}

cal::RcsPattern read_pattern_csv(const std::filesystem::path& path) {
  auto is = open_in(path);
  try {
    return read_pattern_csv(is);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<std::pair<double, double>> plot_rows(const cal::RcsPattern& pattern) {
  if (pattern.angles_deg.size() != pattern.rcs_m2.size()) {
    throw FormatError("pattern angle/RCS count mismatch");
  }
  std::vector<std::size_t> order(pattern.angles_deg.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pattern.angles_deg[a] < pattern.angles_deg[b];
  });
  std::vector<std::pair<double, double>> rows;
  rows.reserve(order.size());
  for (std::size_t i : order) {
    rows.emplace_back(pattern.angles_deg[i], to_dbsm_clamped(pattern.rcs_m2[i]));
  }
  return rows;
}

void write_plot_data(std::ostream& os, const cal::RcsPattern& pattern) {
  os << "angle_deg,rcs_dbsm\n";
  for (const auto& [angle, dbsm] : plot_rows(pattern)) {
    os << format_real(angle) << ',' << format_real(dbsm) << '\n';
  }
}

void write_plot_data(const std::filesystem::path& path, const cal::RcsPattern& pattern) {
  auto os = open_out(path);
  write_plot_data(os, pattern);
  if (!os) throw IoError("failed writing '" + path.string() + "'");
}

void write_sphere_rcs_csv(std::ostream& os, const std::vector<SphereRcsRow>& rows) {
  os << "freq_hz,rcs_m2,rcs_dbsm,region\n";
  for (const auto& r : rows) {
    os << format_real(r.freq_hz) << ',' << format_real(r.rcs_m2) << ','
       << format_real(to_dbsm_clamped(r.rcs_m2)) << ',' << mie::region_name(r.region) << '\n';
  }
}

Scene scene_from_json(const json& j) {
  try {
    Scene s;
    const json& t = j.at("target");
    s.target.name = t.value("name", std::string("target"));
    for (const auto& c : t.value("centers", json::array())) {
      s.target.centers.push_back(center_from_json(c));
    }
    if (t.contains("sphere_radius_m")) {
      s.target.sphere = mie::SphereSpec{t.at("sphere_radius_m").get<double>()};
    }
    if (j.contains("geometry")) {
      const json& g = j.at("geometry");
      s.geometry.antenna_range_m = g.value("antenna_range_m", s.geometry.antenna_range_m);
      s.geometry.azimuth_start_deg = g.value("azimuth_start_deg", s.geometry.azimuth_start_deg);
      s.geometry.azimuth_stop_deg = g.value("azimuth_stop_deg", s.geometry.azimuth_stop_deg);
      s.geometry.azimuth_step_deg = g.value("azimuth_step_deg", s.geometry.azimuth_step_deg);
    }
    if (j.contains("sweep")) {
      const json& w = j.at("sweep");
      s.sweep.freq_start_hz = w.value("freq_start_hz", s.sweep.freq_start_hz);
      s.sweep.freq_stop_hz = w.value("freq_stop_hz", s.sweep.freq_stop_hz);
      s.sweep.n_points = w.value("n_points", s.sweep.n_points);
    }
    if (j.contains("artifacts")) {
      const json& a = j.at("artifacts");
      if (a.contains("leakage")) s.artifacts.leakage = tone_from_json(a.at("leakage"));
      if (a.contains("coupling")) s.artifacts.coupling = tone_from_json(a.at("coupling"));
      for (const auto& c : a.value("background", json::array())) {
        s.artifacts.background.push_back(center_from_json(c));
      }
      s.artifacts.noise_std = a.value("noise_std", 0.0);
      if (a.contains("gain")) {
        const json& g = a.at("gain");
        s.artifacts.gain = g.is_number() ? cplx{g.get<double>(), 0.0}
                                         : cplx{g.value("re", 1.0), g.value("im", 0.0)};
      }
    }
    s.artifacts.seed = j.value("seed", std::uint64_t{0});
    s.target.validate();
    s.geometry.validate();
    s.sweep.validate();
    s.artifacts.validate();
    return s;
  } catch (const json::exception& e) {
    throw FormatError(std::string("scene JSON: ") + e.what());
  }
}

json scene_to_json(const Scene& s) {
  json target{{"name", s.target.name}, {"centers", json::array()}};
  for (const auto& c : s.target.centers) target["centers"].push_back(center_to_json(c));
  if (s.target.sphere) target["sphere_radius_m"] = s.target.sphere->radius_m;
  json background = json::array();
  for (const auto& c : s.artifacts.background) background.push_back(center_to_json(c));
  return {
      {"target", target},
      {"geometry",
       {{"antenna_range_m", s.geometry.antenna_range_m},
        {"azimuth_start_deg", s.geometry.azimuth_start_deg},
        {"azimuth_stop_deg", s.geometry.azimuth_stop_deg},
        {"azimuth_step_deg", s.geometry.azimuth_step_deg}}},
      {"sweep",
       {{"freq_start_hz", s.sweep.freq_start_hz},
        {"freq_stop_hz", s.sweep.freq_stop_hz},
        {"n_points", s.sweep.n_points}}},
      {"artifacts",
       {{"leakage",
         {{"amplitude", s.artifacts.leakage.amplitude}, {"delay_s", s.artifacts.leakage.delay_s}}},
        {"coupling",
         {{"amplitude", s.artifacts.coupling.amplitude},
          {"delay_s", s.artifacts.coupling.delay_s}}},
        {"background", background},
        {"noise_std", s.artifacts.noise_std},
        {"gain", {{"re", s.artifacts.gain.real()}, {"im", s.artifacts.gain.imag()}}}}},
      {"seed", s.artifacts.seed},
  };
}

Scene read_scene(const std::filesystem::path& path) { return scene_from_json(read_json(path)); }

json ranking_to_json(const stats::ModelRanking& ranking, std::size_t sample_count) {
  json models = json::array();
  for (const auto& r : ranking.results) {
    json params;
    std::visit(
        [&](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, stats::LogNormal>) {
            params = {{"mu", m.mu}, {"sigma", m.sigma}};
          } else if constexpr (std::is_same_v<T, stats::Rayleigh>) {
            params = {{"scale", m.scale}};
          } else {
            params = {{"shape", m.shape}, {"loc", m.loc}, {"scale", m.scale}};
          }
        },
        r.model);
    models.push_back({{"model", r.name()},
                      {"params", params},
                      {"loglik", r.loglik},
                      {"K", r.k},
                      {"aic", r.aic},
                      {"status", "ok"}});
  }
  for (const auto& s : ranking.skipped) {
    models.push_back({{"model", stats::family_name(s.family)},
                      {"K", stats::parameter_count(s.family)},
                      {"status", "skipped"},
                      {"reason", s.reason}});
  }
  return {{"fitting_scale", "linear_m2"},
          {"sample_count", sample_count},
          {"best", ranking.best().name()},
          {"models", models}};
}

json read_json(const std::filesystem::path& path) {
  auto is = open_in(path);
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  auto os = open_out(path);
  os << j.dump(2) << '\n';
  if (!os) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace rcslab::io
