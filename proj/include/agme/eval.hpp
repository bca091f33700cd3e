#pragma once

#include <functional>
#include <span>
#include <vector>

#include "agme/environment.hpp"
#include "agme/repertoire.hpp"
#include "agme/skill.hpp"

namespace agme {

struct EvalConfig {
  int num_goals = 100;        // test goals per evaluation
  double epsilon = 0.05;      // success radius in ground-truth state space
  std::uint64_t rng_seed = 1000003;  // independent of the training seed
  int schedule_every = 100;   // evaluate every this many trials
};

// 1 iff the achieved state lies within epsilon of the goal state
// (boundary inclusive).
int success_indicator(const Vec2& goal_state, const Vec2& achieved_state,
                      double epsilon);

// Fixed goal set drawn once per run and reused at every evaluation.
std::vector<TestGoal> sample_test_goals(Environment& env, int count, Rng& rng);

// Success rate over the goal set: each goal's policy comes from
// policy_for, is executed, and the achieved ground-truth state is
// compared against the goal state. Evaluation never touches the
// repertoire.
double success_rate(
    std::span<const TestGoal> goals, Environment& env, double epsilon,
    const std::function<PolicyParams(const TestGoal&)>& policy_for);

// Convenience overload: policies retrieved through the skill.
double success_rate(std::span<const TestGoal> goals, Environment& env,
                    double epsilon, const ParameterizedSkill& skill);

// Mean pairwise distance among ground-truth states; needs at least 2.
double dispersion(std::span<const Vec2> states);

// Same, recovering each state by re-executing the stored policy.
double dispersion(const Repertoire& repertoire, Environment& env);

}  // namespace agme
