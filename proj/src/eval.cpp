#include "agme/eval.hpp"

#include <stdexcept>

#include "agme/types.hpp"

namespace agme {

int success_indicator(const Vec2& goal_state, const Vec2& achieved_state,
                      double epsilon) {
  if (epsilon < 0.0) {
    throw std::invalid_argument("success_indicator: epsilon must be >= 0");
  }
  return distance(goal_state, achieved_state) <= epsilon ? 1 : 0;
}

std::vector<TestGoal> sample_test_goals(Environment& env, int count, Rng& rng) {
  if (count < 0) {
    throw std::invalid_argument("sample_test_goals: count must be >= 0");
  }
  std::vector<TestGoal> goals;
  goals.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    goals.push_back(env.sample_test_goal(rng));
  }
  return goals;
}

double success_rate(
    std::span<const TestGoal> goals, Environment& env, double epsilon,
    const std::function<PolicyParams(const TestGoal&)>& policy_for) {
  if (goals.empty()) {
    throw std::invalid_argument("success_rate: empty goal set");
  }
  int hits = 0;
  for (const TestGoal& goal : goals) {
    env.execute(policy_for(goal));
    hits += success_indicator(goal.state, env.last_state(), epsilon);
  }
  return static_cast<double>(hits) / static_cast<double>(goals.size());
}

double success_rate(std::span<const TestGoal> goals, Environment& env,
                    double epsilon, const ParameterizedSkill& skill) {
  return success_rate(goals, env, epsilon, [&skill](const TestGoal& goal) {
    return skill.query(goal.observation);
  });
}

double dispersion(std::span<const Vec2> states) {
  const std::size_t n = states.size();
  if (n < 2) {
    throw InsufficientDataError("dispersion: need at least 2 states");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      total += distance(states[i], states[j]);
    }
  }
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  return total / pairs;
}

double dispersion(const Repertoire& repertoire, Environment& env) {
  std::vector<Vec2> states;
  states.reserve(repertoire.size());
  for (std::size_t i = 0; i < repertoire.size(); ++i) {
    env.execute(repertoire.policy(i));
    states.push_back(env.last_state());
  }
  return dispersion(states);
}

}  // namespace agme
