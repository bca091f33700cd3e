#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "agme/environment.hpp"
#include "agme/exploration.hpp"
#include "agme/repertoire.hpp"
#include "agme/rng.hpp"

namespace agme {

struct BabblingConfig {
  double sigma_bubble = 0.05;        // goal-space noise scale, isotropic
  std::vector<double> sigma_policy;  // policy noise per dimension
  int k_inverse = 3;                 // neighbors for the inverse model
  int trials = 2000;
  std::uint64_t rng_seed = 0;
};

// Distance-weighted average of the policies of the k_inverse stored
// outcomes nearest to target (weights 1/(d + 1e-9), normalized). A target
// exactly matching a stored outcome returns that outcome's policy.
PolicyParams inverse_model(const Repertoire& repertoire,
                           const SensorVector& target, int k_inverse);

// One baseline step: pick a stored outcome uniformly at random, blur it
// into a nearby goal, regress a policy for that goal through the inverse
// model, add policy noise, execute, and append the achieved pair.
void babbling_step(Repertoire& repertoire, Environment& env,
                   const BabblingConfig& cfg, Rng& rng);

// Seeds the repertoire from env.seed_policy(), performs cfg.trials steps,
// and fires the hook at every trial number listed in hook_trials.
ExplorationResult babbling_run(Environment& env, const BabblingConfig& cfg,
                               std::span<const int> hook_trials = {},
                               const TrialCallback& hook = nullptr);

}  // namespace agme
