#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rig {

inline constexpr const char* kCodeVersion = "0.1.0";

enum class Regime { somewhere_dense_expected, bounded_expansion_expected };

// alpha <= 1 is expected somewhere-dense, alpha > 1 expected bounded
// expansion. Throws std::invalid_argument on alpha <= 0.
Regime regime_classifier(double alpha);
std::string to_string(Regime r);

struct ConcentrationSpec {
  double epsilon = 0.1;
  std::vector<int> subset_sizes;
};

struct ExperimentConfig {
  std::string name = "experiment";
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  std::vector<int> n_values;
  int trials = 1;
  std::uint64_t base_seed = 0;

  // measurement toggles
  bool degeneracy = false;
  bool max_attr_degree = false;
  bool grad0 = false;
  bool four_point_delta = false;  // measured on a capped ball of the giant component
  bool special_certificate = false;
  std::vector<int> coloring_ks;
  std::optional<ConcentrationSpec> concentration;
  std::vector<int> degree_tail_thresholds;

  // caps
  int delta_size_cap = 600;
};

ExperimentConfig preset_config(const std::string& name);  // throws on unknown names
std::vector<std::string> preset_names();

struct CellValues {
  int n = 0;
  std::string measurement;
  std::vector<std::optional<double>> values;  // per trial; nullopt = skipped
};

struct ExperimentResult {
  ExperimentConfig config;
  std::string config_hash;
  std::vector<std::uint64_t> trial_seeds;  // base_seed + trial index
  std::vector<CellValues> cells;           // n-major, fixed measurement order
};

// For each n and trial: derive parameters with seed base_seed + trial,
// sample, project, run every requested measurement. Measurements that hit a
// size cap record a skipped value; the sweep never aborts. Deterministic for
// a fixed config.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Average of the two middle elements for even sizes. Throws on empty input.
double median(std::vector<double> values);

// Seed for one measurement inside one trial, derived by hashing so every
// cell is recomputable in isolation.
std::uint64_t measurement_seed(std::uint64_t trial_seed, const std::string& measurement);

// FNV-1a over the canonical JSON form of the config, as "fnv1a:<16 hex>".
std::string config_hash(const ExperimentConfig& c);

ExperimentConfig config_from_json_file(const std::string& path);

// Writes summary.csv (n,measurement,median,min,max) and trials.json under
// <out_dir>/<name>/<stamp>/ and returns that directory. File contents carry
// no timestamps; reruns of the same config produce byte-identical files.
std::string write_results(const ExperimentResult& r, const std::string& out_dir);

}  // namespace rig
