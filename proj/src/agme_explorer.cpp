#include "agme/agme.hpp"

#include <algorithm>
#include <string>

#include "agme/manifold_graph.hpp"

namespace agme {

namespace {

void check_config(const AgmeConfig& cfg, const Environment& env) {
  if (cfg.k < 1) throw ConfigError("agme: k must be >= 1");
  if (cfg.trials < 0) throw ConfigError("agme: trials must be >= 0");
  if (cfg.sigma.size() != env.policy_dim()) {
    throw ConfigError("agme: sigma length " + std::to_string(cfg.sigma.size()) +
                      " != policy_dim " + std::to_string(env.policy_dim()));
  }
  for (double s : cfg.sigma) {
    if (!(s >= 0.0)) throw ConfigError("agme: sigma entries must be >= 0");
  }
}

PolicyParams perturb(const PolicyParams& basis, const std::vector<double>& sigma,
                     Rng& rng) {
  PolicyParams out(basis.size());
  for (std::size_t d = 0; d < basis.size(); ++d) {
    out[d] = basis[d] + rng.gaussian(sigma[d]);
  }
  return out;
}

void append_trial(Repertoire& repertoire, Environment& env,
                  const PolicyParams& policy, std::vector<Vec2>* states) {
  SensorVector outcome = env.execute(policy);
  if (states) states->push_back(env.last_state());
  repertoire.add(std::move(outcome), policy);
}

}  // namespace

void agme_step(Repertoire& repertoire, Environment& env, const AgmeConfig& cfg,
               Rng& rng) {
  check_config(cfg, env);
  if (repertoire.empty()) {
    throw EmptyRepertoireError("agme_step: repertoire must be seeded");
  }
  // A lone outcome is its own frontier; with two or more, rank by mean
  // distance to the nearest neighbors.
  std::size_t basis = 0;
  if (repertoire.size() > 1) {
    basis = select_basis(knn_stats(repertoire.outcomes(), cfg.k));
  }
  const PolicyParams policy = perturb(repertoire.policy(basis), cfg.sigma, rng);
  append_trial(repertoire, env, policy, nullptr);
}

ExplorationResult agme_run(Environment& env, const AgmeConfig& cfg,
                           std::span<const int> hook_trials,
                           const TrialCallback& hook) {
  check_config(cfg, env);
  Rng rng = Rng::stream(cfg.rng_seed, kTrainingStream);

  ExplorationResult result;
  append_trial(result.repertoire, env, env.seed_policy(), &result.states);

  NeighborTracker graph(cfg.k);
  graph.append(result.repertoire.outcomes());

  auto fire = [&](int trial) {
    if (hook && std::find(hook_trials.begin(), hook_trials.end(), trial) !=
                    hook_trials.end()) {
      hook(trial, result.repertoire, result.states);
    }
  };
  fire(0);

  for (int trial = 1; trial <= cfg.trials; ++trial) {
    const std::size_t basis = graph.select();
    const PolicyParams policy =
        perturb(result.repertoire.policy(basis), cfg.sigma, rng);
    append_trial(result.repertoire, env, policy, &result.states);
    graph.append(result.repertoire.outcomes());
    fire(trial);
  }
  return result;
}

}  // namespace agme
