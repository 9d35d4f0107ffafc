#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "anc/optimize.hpp"

namespace anc {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GainDistribution {
  std::string name = "normal";  // "normal" or "uniform"
  double mean = 0.0;
  double stddev = 1.0;
  double low = -1.0;
  double high = 1.0;
};

struct RelayPowerRule {
  std::string name = "equal_to_source";  // "equal_to_source", "fixed" or "list"
  double value = 1.0;
  std::vector<double> values;
};

struct FigureSpec {
  std::string path;
  std::vector<std::string> series;  // column names from the sweep table
  std::string title;
};

struct ExperimentConfig {
  int n_relays = 2;
  int k = 2;
  GainDistribution gain_distribution;
  double noise_var = 1.0;
  RelayPowerRule relay_power_rule;
  double ps_db_start = 0.0;  // ps_db = 10 log10(P_s / noise_var)
  double ps_db_stop = 30.0;
  double ps_db_step = 5.0;
  int instances = 100;
  std::uint64_t seed = 1;
  std::vector<Objective> objectives = {Objective::exact, Objective::zeroth, Objective::upper,
                                       Objective::lower};
  OptimizeOptions optimizer;
  int threads = 0;  // 0 = hardware concurrency
  std::string csv_path = "sweep.csv";
  std::vector<FigureSpec> figures;
};

// Per-point aggregates; absolute-gap columns are means of per-instance gaps.
// A statistic whose objectives were not run is NaN.
struct SweepRow {
  double ps_db = 0.0;
  double exact_mean = 0.0;
  double zeroth_mean = 0.0;
  double ub_mean = 0.0;
  double lb_mean = 0.0;
  double gap_ub_lb = 0.0;
  double gap_zeroth_exact = 0.0;
  int instances = 0;
  std::uint64_t seed = 0;
};

ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config(const std::string& path);

// For each P_s point: sample `instances` networks from the configured gain
// distribution and maximize every configured objective. Instances evaluate
// concurrently (instance-index-derived seeds) and aggregate in index order,
// so the table is deterministic under a fixed config seed.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config);

void write_sweep_csv(const std::vector<SweepRow>& rows, const ExperimentConfig& config,
                     const std::string& path);
void write_sweep_svg(const std::vector<SweepRow>& rows, const FigureSpec& figure,
                     const std::string& path);

// run_sweep + CSV + figures; optional per-point progress lines on stdout.
std::vector<SweepRow> run_experiment(const ExperimentConfig& config, bool verbose = false);

}  // namespace anc
