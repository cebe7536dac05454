// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

// File formats: sweep CSV (angle_deg,freq_hz,re,im), pattern CSV
// (angle_deg,rcs_m2,rcs_dbsm), plot-data CSV (angle_deg,rcs_dbsm),
// sphere-rcs CSV (freq_hz,rcs_m2,rcs_dbsm,region) and the JSON scene
// description consumed by the simulator. Reals are written with 17
// significant digits so files round-trip exactly.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rcslab/calibration.hpp"
#include "rcslab/mie.hpp"
#include "rcslab/scatter_sim.hpp"
#include "rcslab/stats.hpp"
#include "rcslab/sweep.hpp"

namespace rcslab::io {

std::string format_real(double v);

void write_scan_csv(std::ostream& os, const AzimuthScan& scan);
void write_scan_csv(const std::filesystem::path& path, const AzimuthScan& scan);
/// Rows must be sorted by (angle, freq); throws FormatError otherwise.
AzimuthScan read_scan_csv(std::istream& is);
AzimuthScan read_scan_csv(const std::filesystem::path& path);

void write_pattern_csv(std::ostream& os, const cal::RcsPattern& pattern);
void write_pattern_csv(const std::filesystem::path& path, const cal::RcsPattern& pattern);
cal::RcsPattern read_pattern_csv(std::istream& is);
cal::RcsPattern read_pattern_csv(const std::filesystem::path& path);

/// (angle, dBsm) rows in ascending angle order, dBsm floored at -60.
std::vector<std::pair<double, double>> plot_rows(const cal::RcsPattern& pattern);
void write_plot_data(std::ostream& os, const cal::RcsPattern& pattern);
void write_plot_data(const std::filesystem::path& path, const cal::RcsPattern& pattern);

struct SphereRcsRow {
  double freq_hz;
  double rcs_m2;
  mie::ScatteringRegion region;
};
void write_sphere_rcs_csv(std::ostream& os, const std::vector<SphereRcsRow>& rows);

/// Complete simulator input.
struct Scene {
  sim::TargetModel target;
  sim::ScanGeometry geometry;
  sim::SweepConfig sweep;
  sim::ChamberArtifacts artifacts;
};

Scene scene_from_json(const nlohmann::json& j);
nlohmann::json scene_to_json(const Scene& scene);
Scene read_scene(const std::filesystem::path& path);

/// Fit report: per-model params/loglik/K/aic/status, best, sample count and
/// the fitting scale.
nlohmann::json ranking_to_json(const stats::ModelRanking& ranking, std::size_t sample_count);

nlohmann::json read_json(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace rcslab::io
