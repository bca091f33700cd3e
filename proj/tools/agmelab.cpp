#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "agme/runner.hpp"

namespace fs = std::filesystem;

namespace {

int do_run(const std::string& config_path, const CLI::App& cmd, int trials,
           const std::vector<std::uint64_t>& seeds, const std::string& out_dir,
           const std::string& mode, const std::string& algorithm, bool no_dumps) {
  agme::RunConfig cfg = agme::load_config(config_path);
  if (cmd.count("--trials") > 0) {
    cfg.agme.trials = trials;
    cfg.babbling.trials = trials;
  }
  if (cmd.count("--seeds") > 0) cfg.seeds = seeds;
  if (cmd.count("--output-dir") > 0) cfg.output_dir = out_dir;
  if (cmd.count("--mode") > 0) {
    cfg.mode = agme::observation_mode_from_string(mode);
  }
  if (cmd.count("--algorithm") > 0) {
    cfg.algorithm = agme::algorithm_from_string(algorithm);
  }
  if (no_dumps) cfg.dump_outcomes = false;

  const agme::ExperimentResult result = agme::run_experiment(cfg);
  for (const agme::SeedResult& seed : result.per_seed) {
    const agme::MetricsRow& last = seed.metrics.back();
    std::cout << "seed " << seed.seed << ": final perf "
              << agme::format_double(last.perf) << ", dispersion "
              << agme::format_double(last.dispersion) << ", repertoire "
              << last.repertoire_size << "\n";
  }
  std::cout << "wrote " << result.output_dir.string() << "\n";
  return 0;
}

int do_compare(const std::string& dir_a, const std::string& dir_b) {
  std::cout << agme::to_text(agme::compare_runs(dir_a, dir_b));
  return 0;
}

fs::path resolve_replay_config(const fs::path& dump,
                               const std::string& config_flag) {
  if (!config_flag.empty()) return config_flag;
  // Dumps normally live in <run>/seed_<s>/, next to the run's config.json.
  for (const fs::path dir :
       {dump.parent_path(), dump.parent_path().parent_path()}) {
    const fs::path candidate = dir / "config.json";
    if (fs::is_regular_file(candidate)) return candidate;
  }
  throw agme::ConfigError(
      "cannot locate config.json near " + dump.string() +
      "; pass --config explicitly");
}

int do_replay(const std::string& dump, const std::string& index_arg,
              const std::string& config_flag) {
  const fs::path config_path = resolve_replay_config(dump, config_flag);
  const agme::RunConfig cfg = agme::load_config(config_path);
  const auto env = agme::make_environment(cfg.environment, cfg.mode);

  std::optional<std::size_t> index;
  if (index_arg != "all") {
    std::size_t pos = 0;
    index = std::stoull(index_arg, &pos);
    if (pos != index_arg.size()) {
      throw agme::ParseError("index must be a number or 'all', got '" +
                             index_arg + "'");
    }
  }
  const agme::ReplayReport report = agme::replay(dump, *env, index);
  std::cout << "checked " << report.checked << " rows, matched "
            << report.matched << "\n";
  return report.all_matched() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"goal-manifold exploration laboratory"};
  app.require_subcommand(1);

  CLI::App* run_cmd =
      app.add_subcommand("run", "run a configured experiment over all seeds");
  std::string config_path;
  int trials = 0;
  std::vector<std::uint64_t> seeds;
  std::string out_dir;
  std::string mode;
  std::string algorithm;
  bool no_dumps = false;
  run_cmd->add_option("config", config_path, "JSON run configuration")
      ->required()
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--trials", trials, "override the trial budget");
  run_cmd->add_option("--seeds", seeds, "override the replicate seeds")
      ->delimiter(',');
  run_cmd->add_option("--output-dir", out_dir, "override the output directory");
  run_cmd->add_option("--mode", mode, "override: ground_truth or image");
  run_cmd->add_option("--algorithm", algorithm, "override: agme or babbling");
  run_cmd->add_flag("--no-dumps", no_dumps, "skip repertoire CSV dumps");

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "mean perf curves of two finished experiments");
  std::string dir_a;
  std::string dir_b;
  compare_cmd->add_option("dir_a", dir_a, "first experiment directory")
      ->required();
  compare_cmd->add_option("dir_b", dir_b, "second experiment directory")
      ->required();

  CLI::App* replay_cmd = app.add_subcommand(
      "replay", "re-execute dumped policies and verify stored outcomes");
  std::string dump;
  std::string index_arg = "all";
  std::string replay_config;
  replay_cmd->add_option("dump", dump, "repertoire CSV dump")
      ->required()
      ->check(CLI::ExistingFile);
  replay_cmd->add_option("index", index_arg, "row index or 'all'");
  replay_cmd->add_option("--config", replay_config,
                         "run config describing the environment");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      return do_run(config_path, *run_cmd, trials, seeds, out_dir, mode,
                    algorithm, no_dumps);
    }
    if (compare_cmd->parsed()) return do_compare(dir_a, dir_b);
    if (replay_cmd->parsed()) return do_replay(dump, index_arg, replay_config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
