#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "strata/eval/metrics.hpp"
#include "strata/foa/covers.hpp"
#include "strata/nal/rules.hpp"
#include "strata/scene/generator.hpp"
#include "strata/spatial/predicates.hpp"

namespace strata::eval {

enum class FoAMode { Both, On, Off };

std::string_view to_string(FoAMode mode);

/// Shelf count {8, 16} x jitter {low, high}, other noise at generator
/// defaults.
std::vector<scene::GenConfig> default_settings();

inline constexpr double kJitterLow = 0.005;
inline constexpr double kJitterHigh = 0.01;

struct ExperimentConfig {
  std::vector<scene::GenConfig> settings = default_settings();
  int trials = 10;
  FoAMode foa = FoAMode::Both;
  spatial::Tolerances tolerances;
  std::vector<nal::Rule> rules = nal::default_rules();
  foa::FoAConfig foa_config;
  std::uint64_t master_seed = 0;
  /// Cells run concurrently; the report does not depend on it.
  std::size_t threads = 1;
  void check() const;
};

/// Generator seed of one (setting, trial) cell.
std::uint64_t cell_seed(std::uint64_t master, std::size_t setting, std::size_t trial);

struct Cell {
  std::size_t setting = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  int rects = 0;
  std::map<std::string, double> accuracy;  // by mode
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct ModeSummary {
  std::map<Label, ClassMetrics> per_class;  // means over cells
  double accuracy_mean = 0.0;
  double accuracy_min = 0.0;
  double accuracy_max = 0.0;
  friend bool operator==(const ModeSummary&, const ModeSummary&) = default;
};

struct Report {
  std::uint64_t master_seed = 0;
  int trials = 0;
  std::vector<scene::GenConfig> settings;
  std::vector<Cell> cells;                    // sorted by (setting, trial)
  std::map<std::string, ModeSummary> modes;   // "foa", "whole"
  friend bool operator==(const Report&, const Report&) = default;
};

/// Generates every cell's scene, labels it per mode and scores it.
Report run_experiment(const ExperimentConfig& cfg);

std::string save_report(const Report& report);
Report load_report(std::string_view text);

}  // namespace strata::eval
