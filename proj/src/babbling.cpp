#include "agme/babbling.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace agme {

namespace {

void check_config(const BabblingConfig& cfg, const Environment& env) {
  if (cfg.k_inverse < 1) throw ConfigError("babbling: k_inverse must be >= 1");
  if (cfg.trials < 0) throw ConfigError("babbling: trials must be >= 0");
  if (!(cfg.sigma_bubble >= 0.0)) {
    throw ConfigError("babbling: sigma_bubble must be >= 0");
  }
  if (cfg.sigma_policy.size() != env.policy_dim()) {
    throw ConfigError("babbling: sigma_policy length " +
                      std::to_string(cfg.sigma_policy.size()) +
                      " != policy_dim " + std::to_string(env.policy_dim()));
  }
  for (double s : cfg.sigma_policy) {
    if (!(s >= 0.0)) throw ConfigError("babbling: sigma_policy entries must be >= 0");
  }
}

}  // namespace

PolicyParams inverse_model(const Repertoire& repertoire,
                           const SensorVector& target, int k_inverse) {
  if (k_inverse < 1) {
    throw std::invalid_argument("inverse_model: k_inverse must be >= 1");
  }
  if (repertoire.empty()) {
    throw EmptyRepertoireError("inverse_model: empty repertoire");
  }
  // k_inverse smallest (distance, index) pairs; pair order breaks distance
  // ties toward the lowest index.
  std::vector<std::pair<double, std::size_t>> nb;
  for (std::size_t j = 0; j < repertoire.size(); ++j) {
    const std::pair<double, std::size_t> cand{
        euclidean_distance(target, repertoire.outcome(j)), j};
    if (nb.size() < static_cast<std::size_t>(k_inverse)) {
      nb.insert(std::upper_bound(nb.begin(), nb.end(), cand), cand);
    } else if (cand < nb.back()) {
      nb.pop_back();
      nb.insert(std::upper_bound(nb.begin(), nb.end(), cand), cand);
    }
  }
  if (nb.front().first == 0.0) {
    return repertoire.policy(nb.front().second);
  }
  double total = 0.0;
  for (const auto& [d, j] : nb) total += 1.0 / (d + 1e-9);
  PolicyParams out(repertoire.policy(0).size(), 0.0);
  for (const auto& [d, j] : nb) {
    const double w = (1.0 / (d + 1e-9)) / total;
    const PolicyParams& p = repertoire.policy(j);
    for (std::size_t dim = 0; dim < out.size(); ++dim) {
      out[dim] += w * p[dim];
    }
  }
  return out;
}

void babbling_step(Repertoire& repertoire, Environment& env,
                   const BabblingConfig& cfg, Rng& rng) {
  check_config(cfg, env);
  if (repertoire.empty()) {
    throw EmptyRepertoireError("babbling_step: repertoire must be seeded");
  }
  const std::size_t anchor = rng.index(repertoire.size());
  SensorVector target = repertoire.outcome(anchor);
  for (double& v : target) v += rng.gaussian(cfg.sigma_bubble);

  PolicyParams policy = inverse_model(repertoire, target, cfg.k_inverse);
  for (std::size_t d = 0; d < policy.size(); ++d) {
    policy[d] += rng.gaussian(cfg.sigma_policy[d]);
  }
  SensorVector outcome = env.execute(policy);
  repertoire.add(std::move(outcome), std::move(policy));
}

ExplorationResult babbling_run(Environment& env, const BabblingConfig& cfg,
                               std::span<const int> hook_trials,
                               const TrialCallback& hook) {
  check_config(cfg, env);
  Rng rng = Rng::stream(cfg.rng_seed, kTrainingStream);

  ExplorationResult result;
  {
    PolicyParams seed = env.seed_policy();
    SensorVector outcome = env.execute(seed);
    result.states.push_back(env.last_state());
    result.repertoire.add(std::move(outcome), std::move(seed));
  }

  auto fire = [&](int trial) {
    if (hook && std::find(hook_trials.begin(), hook_trials.end(), trial) !=
                    hook_trials.end()) {
      hook(trial, result.repertoire, result.states);
    }
  };
  fire(0);

  for (int trial = 1; trial <= cfg.trials; ++trial) {
    babbling_step(result.repertoire, env, cfg, rng);
    result.states.push_back(env.last_state());
    fire(trial);
  }
  return result;
}

}  // namespace agme
