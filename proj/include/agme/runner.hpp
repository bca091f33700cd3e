#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "agme/agme.hpp"
#include "agme/babbling.hpp"
#include "agme/csv.hpp"
#include "agme/environments.hpp"
#include "agme/eval.hpp"

namespace agme {

enum class Algorithm { kAgme, kBabbling };

std::string to_string(Algorithm algorithm);
Algorithm algorithm_from_string(const std::string& s);

struct RunConfig {
  EnvironmentKind environment = EnvironmentKind::kArm;
  ObservationMode mode = ObservationMode::kGroundTruth;
  Algorithm algorithm = Algorithm::kAgme;
  AgmeConfig agme;            // active when algorithm == kAgme
  BabblingConfig babbling;    // active when algorithm == kBabbling
  EvalConfig eval;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  std::vector<int> snapshot_trials = {100, 500, 2000};
  std::filesystem::path output_dir;
  bool dump_outcomes = true;  // repertoire CSV dumps can reach tens of MB

  int trials() const;  // of the active algorithm block
};

// Defaults sized to the chosen environment (noise scales per policy
// dimension); the caller still has to pick an output_dir to run.
RunConfig default_config(EnvironmentKind environment, ObservationMode mode,
                         Algorithm algorithm);

// Strict parse of the JSON schema written by write_config: unknown keys,
// wrong types, and dimension mismatches raise ConfigError naming the
// offending field.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const RunConfig& config);

// Full validation, applied before any trial executes.
void validate_config(const RunConfig& config);

// Resolves output_dir against the AGME_OUTPUT_ROOT environment variable:
// relative paths land inside the root when it is set.
std::filesystem::path resolve_output_dir(const RunConfig& config);

struct SeedResult {
  std::uint64_t seed = 0;
  std::vector<MetricsRow> metrics;
  std::filesystem::path dir;
};

struct ExperimentResult {
  std::filesystem::path output_dir;
  std::vector<SeedResult> per_seed;
};

// Runs every replicate seed sequentially; writes config.json plus one
// seed_<s>/ directory per replicate containing metrics.csv, repertoire
// dumps at the snapshot trials and at the end, and coverage snapshots
// (every discovered ground-truth state dotted into one PPM frame).
ExperimentResult run_experiment(const RunConfig& config);

struct ComparisonSummary {
  std::vector<int> trials;
  std::vector<double> mean_perf_a;
  std::vector<double> mean_perf_b;
  double final_difference = 0.0;  // a minus b at the last trial
};

// Mean perf across seeds per trial for two finished experiment
// directories; schedules must match exactly.
ComparisonSummary compare_runs(const std::filesystem::path& dir_a,
                               const std::filesystem::path& dir_b);

std::string to_text(const ComparisonSummary& summary);

struct ReplayReport {
  std::size_t checked = 0;
  std::size_t matched = 0;

  bool all_matched() const { return checked > 0 && matched == checked; }
};

// Re-executes stored policies from a repertoire dump and verifies the
// stored outcomes are reproduced bit for bit; index empty = all rows.
ReplayReport replay(const std::filesystem::path& dump_path, Environment& env,
                    std::optional<std::size_t> index);

}  // namespace agme
