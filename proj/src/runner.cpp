#include "agme/runner.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "agme/camera.hpp"
#include "agme/skill.hpp"

namespace agme {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_string(Algorithm algorithm) {
  return algorithm == Algorithm::kAgme ? "agme" : "babbling";
}

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "agme") return Algorithm::kAgme;
  if (s == "babbling") return Algorithm::kBabbling;
  throw ConfigError("unknown algorithm '" + s + "'");
}

int RunConfig::trials() const {
  return algorithm == Algorithm::kAgme ? agme.trials : babbling.trials;
}

RunConfig default_config(EnvironmentKind environment, ObservationMode mode,
                         Algorithm algorithm) {
  RunConfig cfg;
  cfg.environment = environment;
  cfg.mode = mode;
  cfg.algorithm = algorithm;
  std::vector<double> sigma;
  switch (environment) {
    case EnvironmentKind::kArm:
      sigma.assign(3, 0.15);  // radians per joint
      break;
    case EnvironmentKind::kPusherLinear:
      sigma.assign(4, 0.1);  // workspace units per segment coordinate
      break;
    case EnvironmentKind::kPusherDmp:
      sigma.assign(10, 15.0);  // forcing weights
      sigma.push_back(0.1);    // end point x
      sigma.push_back(0.1);    // end point y
      break;
    case EnvironmentKind::kColor:
      sigma.assign(4, 0.1);
      break;
  }
  cfg.agme.sigma = sigma;
  // the baseline explores through goal bubbles and the inverse model;
  // its policy noise is only regression jitter, an order below AGME's
  for (double& s : sigma) s *= 0.1;
  cfg.babbling.sigma_policy = std::move(sigma);
  return cfg;
}

namespace {

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

template <typename T>
T get_as(const json& value, const std::string& path) {
  try {
    return value.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    const bool known =
        std::any_of(allowed.begin(), allowed.end(), [&](const char* key) {
          return item.key() == key;
        });
    if (!known) {
      throw ConfigError(path + ": unknown field '" + item.key() + "'");
    }
  }
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  check_keys(j, "config",
             {"environment", "mode", "algorithm", "agme", "babbling", "eval",
              "seeds", "snapshot_trials", "output_dir", "dump_outcomes"});

  EnvironmentKind environment = EnvironmentKind::kArm;
  if (const json* v = find(j, "environment")) {
    environment =
        environment_kind_from_string(get_as<std::string>(*v, "environment"));
  }
  ObservationMode mode = ObservationMode::kGroundTruth;
  if (const json* v = find(j, "mode")) {
    mode = observation_mode_from_string(get_as<std::string>(*v, "mode"));
  }
  Algorithm algorithm = Algorithm::kAgme;
  if (const json* v = find(j, "algorithm")) {
    algorithm = algorithm_from_string(get_as<std::string>(*v, "algorithm"));
  }

  RunConfig cfg = default_config(environment, mode, algorithm);

  if (const json* v = find(j, "agme")) {
    if (!v->is_object()) throw ConfigError("agme: must be an object");
    check_keys(*v, "agme", {"k", "sigma", "trials"});
    if (const json* f = find(*v, "k")) cfg.agme.k = get_as<int>(*f, "agme.k");
    if (const json* f = find(*v, "sigma")) {
      cfg.agme.sigma = get_as<std::vector<double>>(*f, "agme.sigma");
    }
    if (const json* f = find(*v, "trials")) {
      cfg.agme.trials = get_as<int>(*f, "agme.trials");
    }
  }
  if (const json* v = find(j, "babbling")) {
    if (!v->is_object()) throw ConfigError("babbling: must be an object");
    check_keys(*v, "babbling",
               {"k_inverse", "sigma_bubble", "sigma_policy", "trials"});
    if (const json* f = find(*v, "k_inverse")) {
      cfg.babbling.k_inverse = get_as<int>(*f, "babbling.k_inverse");
    }
    if (const json* f = find(*v, "sigma_bubble")) {
      cfg.babbling.sigma_bubble = get_as<double>(*f, "babbling.sigma_bubble");
    }
    if (const json* f = find(*v, "sigma_policy")) {
      cfg.babbling.sigma_policy =
          get_as<std::vector<double>>(*f, "babbling.sigma_policy");
    }
    if (const json* f = find(*v, "trials")) {
      cfg.babbling.trials = get_as<int>(*f, "babbling.trials");
    }
  }
  if (const json* v = find(j, "eval")) {
    if (!v->is_object()) throw ConfigError("eval: must be an object");
    check_keys(*v, "eval", {"num_goals", "epsilon", "rng_seed", "schedule_every"});
    if (const json* f = find(*v, "num_goals")) {
      cfg.eval.num_goals = get_as<int>(*f, "eval.num_goals");
    }
    if (const json* f = find(*v, "epsilon")) {
      cfg.eval.epsilon = get_as<double>(*f, "eval.epsilon");
    }
    if (const json* f = find(*v, "rng_seed")) {
      cfg.eval.rng_seed = get_as<std::uint64_t>(*f, "eval.rng_seed");
    }
    if (const json* f = find(*v, "schedule_every")) {
      cfg.eval.schedule_every = get_as<int>(*f, "eval.schedule_every");
    }
  }
  if (const json* v = find(j, "seeds")) {
    cfg.seeds = get_as<std::vector<std::uint64_t>>(*v, "seeds");
  }
  if (const json* v = find(j, "snapshot_trials")) {
    cfg.snapshot_trials = get_as<std::vector<int>>(*v, "snapshot_trials");
  }
  if (const json* v = find(j, "output_dir")) {
    cfg.output_dir = get_as<std::string>(*v, "output_dir");
  }
  if (const json* v = find(j, "dump_outcomes")) {
    cfg.dump_outcomes = get_as<bool>(*v, "dump_outcomes");
  }
  return cfg;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string config_to_json(const RunConfig& config) {
  json j;
  j["environment"] = to_string(config.environment);
  j["mode"] = to_string(config.mode);
  j["algorithm"] = to_string(config.algorithm);
  j["agme"] = {{"k", config.agme.k},
               {"sigma", config.agme.sigma},
               {"trials", config.agme.trials}};
  j["babbling"] = {{"k_inverse", config.babbling.k_inverse},
                   {"sigma_bubble", config.babbling.sigma_bubble},
                   {"sigma_policy", config.babbling.sigma_policy},
                   {"trials", config.babbling.trials}};
  j["eval"] = {{"num_goals", config.eval.num_goals},
               {"epsilon", config.eval.epsilon},
               {"rng_seed", config.eval.rng_seed},
               {"schedule_every", config.eval.schedule_every}};
  j["seeds"] = config.seeds;
  j["snapshot_trials"] = config.snapshot_trials;
  j["output_dir"] = config.output_dir.generic_string();
  j["dump_outcomes"] = config.dump_outcomes;
  return j.dump(2) + "\n";
}

void validate_config(const RunConfig& config) {
  const std::size_t policy_dim =
      make_environment(config.environment, config.mode)->policy_dim();
  if (config.seeds.empty()) {
    throw ConfigError("seeds: at least one replicate seed required");
  }
  for (int t : config.snapshot_trials) {
    if (t < 0) throw ConfigError("snapshot_trials: entries must be >= 0");
  }
  if (config.output_dir.empty()) throw ConfigError("output_dir: required");
  if (config.eval.num_goals < 1) throw ConfigError("eval.num_goals: must be >= 1");
  if (!(config.eval.epsilon > 0.0)) throw ConfigError("eval.epsilon: must be > 0");
  if (config.eval.schedule_every < 1) {
    throw ConfigError("eval.schedule_every: must be >= 1");
  }
  if (config.algorithm == Algorithm::kAgme) {
    if (config.agme.k < 1) throw ConfigError("agme.k: must be >= 1");
    if (config.agme.trials < 0) throw ConfigError("agme.trials: must be >= 0");
    if (config.agme.sigma.size() != policy_dim) {
      throw ConfigError("agme.sigma: length " +
                        std::to_string(config.agme.sigma.size()) +
                        " != policy dimension " + std::to_string(policy_dim));
    }
    for (double s : config.agme.sigma) {
      if (!(s >= 0.0)) throw ConfigError("agme.sigma: entries must be >= 0");
    }
  } else {
    if (config.babbling.k_inverse < 1) {
      throw ConfigError("babbling.k_inverse: must be >= 1");
    }
    if (config.babbling.trials < 0) {
      throw ConfigError("babbling.trials: must be >= 0");
    }
    if (!(config.babbling.sigma_bubble >= 0.0)) {
      throw ConfigError("babbling.sigma_bubble: must be >= 0");
    }
    if (config.babbling.sigma_policy.size() != policy_dim) {
      throw ConfigError("babbling.sigma_policy: length " +
                        std::to_string(config.babbling.sigma_policy.size()) +
                        " != policy dimension " + std::to_string(policy_dim));
    }
    for (double s : config.babbling.sigma_policy) {
      if (!(s >= 0.0)) {
        throw ConfigError("babbling.sigma_policy: entries must be >= 0");
      }
    }
  }
}

fs::path resolve_output_dir(const RunConfig& config) {
  const char* root = std::getenv("AGME_OUTPUT_ROOT");
  if (root != nullptr && root[0] != '\0' && config.output_dir.is_relative()) {
    return fs::path(root) / config.output_dir;
  }
  return config.output_dir;
}

namespace {

void save_states_ppm(const fs::path& path, std::span<const Vec2> states) {
  Image image(kWhite);
  for (const Vec2& s : states) {
    image.draw_disk(s, 0.02, kBlack);
  }
  image.save_ppm(path.string());
}

SeedResult run_one_seed(const RunConfig& cfg, std::uint64_t seed,
                        const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create " + dir.string() + ": " +
                             ec.message());
  }
  auto train_env = make_environment(cfg.environment, cfg.mode);
  auto eval_env = train_env->clone();
  auto goal_env = train_env->clone();

  Rng goal_rng = Rng::stream(cfg.eval.rng_seed, kEvalStream);
  const std::vector<TestGoal> goals =
      sample_test_goals(*goal_env, cfg.eval.num_goals, goal_rng);

  const int trials = cfg.trials();
  std::vector<int> eval_trials;
  for (int t = 0; t <= trials; t += cfg.eval.schedule_every) {
    eval_trials.push_back(t);
  }
  if (eval_trials.back() != trials) eval_trials.push_back(trials);

  std::vector<int> snapshots;
  for (int t : cfg.snapshot_trials) {
    if (t >= 0 && t <= trials) snapshots.push_back(t);
  }
  std::sort(snapshots.begin(), snapshots.end());
  snapshots.erase(std::unique(snapshots.begin(), snapshots.end()),
                  snapshots.end());

  std::vector<int> hook_trials = eval_trials;
  hook_trials.insert(hook_trials.end(), snapshots.begin(), snapshots.end());
  std::sort(hook_trials.begin(), hook_trials.end());
  hook_trials.erase(std::unique(hook_trials.begin(), hook_trials.end()),
                    hook_trials.end());

  SeedResult result;
  result.seed = seed;
  result.dir = dir;

  const TrialCallback hook = [&](int trial, const Repertoire& repertoire,
                                 std::span<const Vec2> states) {
    if (std::binary_search(eval_trials.begin(), eval_trials.end(), trial)) {
      MetricsRow row;
      row.trial = trial;
      row.perf = success_rate(goals, *eval_env, cfg.eval.epsilon,
                              ParameterizedSkill(repertoire));
      row.dispersion = states.size() >= 2 ? dispersion(states) : 0.0;
      row.repertoire_size = repertoire.size();
      result.metrics.push_back(row);
    }
    if (std::binary_search(snapshots.begin(), snapshots.end(), trial)) {
      const std::string tag = "_t" + std::to_string(trial);
      if (cfg.dump_outcomes) {
        write_repertoire_csv(dir / ("outcomes" + tag + ".csv"), repertoire);
      }
      save_states_ppm(dir / ("states" + tag + ".ppm"), states);
    }
  };

  ExplorationResult run;
  if (cfg.algorithm == Algorithm::kAgme) {
    AgmeConfig algo = cfg.agme;
    algo.rng_seed = seed;
    run = agme_run(*train_env, algo, hook_trials, hook);
  } else {
    BabblingConfig algo = cfg.babbling;
    algo.rng_seed = seed;
    run = babbling_run(*train_env, algo, hook_trials, hook);
  }

  write_metrics_csv(dir / "metrics.csv", result.metrics);
  if (cfg.dump_outcomes) {
    write_repertoire_csv(dir / "outcomes.csv", run.repertoire);
  }
  return result;
}

}  // namespace

ExperimentResult run_experiment(const RunConfig& config) {
  validate_config(config);
  const fs::path out = resolve_output_dir(config);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) {
    throw std::runtime_error("cannot create " + out.string() + ": " +
                             ec.message());
  }
  {
    std::ofstream f(out / "config.json", std::ios::binary);
    if (!f) {
      throw std::runtime_error("cannot write config.json under " + out.string());
    }
    f << config_to_json(config);
  }
  ExperimentResult result;
  result.output_dir = out;
  for (std::uint64_t seed : config.seeds) {
    result.per_seed.push_back(
        run_one_seed(config, seed, out / ("seed_" + std::to_string(seed))));
  }
  return result;
}

namespace {

std::vector<fs::path> seed_metric_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw ComparisonError("not a run directory: " + dir.string());
  }
  std::vector<fs::path> seed_dirs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory() &&
        entry.path().filename().string().starts_with("seed_")) {
      seed_dirs.push_back(entry.path());
    }
  }
  if (seed_dirs.empty()) {
    throw ComparisonError("no seed_* directories in " + dir.string());
  }
  std::sort(seed_dirs.begin(), seed_dirs.end());
  std::vector<fs::path> files;
  for (const fs::path& sd : seed_dirs) {
    const fs::path metrics = sd / "metrics.csv";
    if (!fs::is_regular_file(metrics)) {
      throw ComparisonError("missing metrics file " + metrics.string());
    }
    files.push_back(metrics);
  }
  return files;
}

// mean perf per trial across seed metrics files; checks one shared schedule
std::vector<double> mean_curve(const std::vector<fs::path>& files,
                               std::vector<int>& schedule) {
  std::vector<double> sums;
  for (const fs::path& file : files) {
    const std::vector<MetricsRow> rows = read_metrics_csv(file);
    std::vector<int> trials;
    trials.reserve(rows.size());
    for (const MetricsRow& row : rows) trials.push_back(row.trial);
    if (schedule.empty()) {
      schedule = trials;
      sums.assign(rows.size(), 0.0);
    } else if (trials != schedule) {
      throw ComparisonError("schedule mismatch at " + file.string());
    }
    for (std::size_t i = 0; i < rows.size(); ++i) sums[i] += rows[i].perf;
  }
  for (double& s : sums) s /= static_cast<double>(files.size());
  return sums;
}

}  // namespace

ComparisonSummary compare_runs(const fs::path& dir_a, const fs::path& dir_b) {
  const std::vector<fs::path> files_a = seed_metric_files(dir_a);
  const std::vector<fs::path> files_b = seed_metric_files(dir_b);
  ComparisonSummary summary;
  std::vector<int> schedule_a;
  std::vector<int> schedule_b;
  summary.mean_perf_a = mean_curve(files_a, schedule_a);
  summary.mean_perf_b = mean_curve(files_b, schedule_b);
  if (schedule_a != schedule_b) {
    throw ComparisonError("schedule mismatch between " + dir_a.string() +
                          " and " + dir_b.string());
  }
  summary.trials = schedule_a;
  if (summary.trials.empty()) {
    throw ComparisonError("no evaluation rows to compare");
  }
  summary.final_difference =
      summary.mean_perf_a.back() - summary.mean_perf_b.back();
  return summary;
}

std::string to_text(const ComparisonSummary& summary) {
  std::string out = "trial,mean_perf_a,mean_perf_b,difference\n";
  for (std::size_t i = 0; i < summary.trials.size(); ++i) {
    out += std::to_string(summary.trials[i]);
    out += ',';
    out += format_double(summary.mean_perf_a[i]);
    out += ',';
    out += format_double(summary.mean_perf_b[i]);
    out += ',';
    out += format_double(summary.mean_perf_a[i] - summary.mean_perf_b[i]);
    out += '\n';
  }
  out += "final_difference=" + format_double(summary.final_difference) + "\n";
  return out;
}

ReplayReport replay(const fs::path& dump_path, Environment& env,
                    std::optional<std::size_t> index) {
  const Repertoire repertoire = read_repertoire_csv(dump_path);
  if (repertoire.empty()) {
    throw ParseError("replay: dump has no rows: " + dump_path.string());
  }
  if (repertoire.outcome(0).size() != env.outcome_dim()) {
    throw DimensionError("replay: dump outcome dimension " +
                         std::to_string(repertoire.outcome(0).size()) +
                         " != environment outcome dimension " +
                         std::to_string(env.outcome_dim()));
  }
  ReplayReport report;
  const auto check = [&](std::size_t i) {
    const SensorVector outcome = env.execute(repertoire.policy(i));
    ++report.checked;
    if (outcome == repertoire.outcome(i)) ++report.matched;
  };
  if (index.has_value()) {
    if (*index >= repertoire.size()) {
      throw std::out_of_range("replay: index " + std::to_string(*index) +
                              " out of range (dump has " +
                              std::to_string(repertoire.size()) + " rows)");
    }
    check(*index);
  } else {
    for (std::size_t i = 0; i < repertoire.size(); ++i) check(i);
  }
  return report;
}

}  // namespace agme
