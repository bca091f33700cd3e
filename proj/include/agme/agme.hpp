#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "agme/environment.hpp"
#include "agme/exploration.hpp"
#include "agme/repertoire.hpp"
#include "agme/rng.hpp"

namespace agme {

struct AgmeConfig {
  int k = 5;                   // neighbors for the frontier statistic
  std::vector<double> sigma;   // policy noise scale per dimension
  int trials = 2000;
  std::uint64_t rng_seed = 0;
};

// One exploration step: pick the stored outcome with the largest mean
// distance to its nearest neighbors, perturb its policy with per-dimension
// Gaussian noise, execute, and append the achieved pair. Recomputes the
// neighbor graph from scratch; the run loop below uses an incremental
// distance cache that yields identical results.
void agme_step(Repertoire& repertoire, Environment& env, const AgmeConfig& cfg,
               Rng& rng);

// Seeds the repertoire from env.seed_policy(), performs cfg.trials steps,
// and fires the hook at every trial number listed in hook_trials
// (trial 0 = seed only).
ExplorationResult agme_run(Environment& env, const AgmeConfig& cfg,
                           std::span<const int> hook_trials = {},
                           const TrialCallback& hook = nullptr);

}  // namespace agme
