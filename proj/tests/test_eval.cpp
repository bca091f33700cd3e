#include <cmath>
#include <vector>

#include "doctest.h"

#include "agme/agme.hpp"
#include "agme/environments.hpp"
#include "agme/eval.hpp"

using namespace agme;

TEST_CASE("the success indicator is boundary inclusive") {
  CHECK(success_indicator({0.3, 0.3}, {0.3, 0.3}, 0.0) == 1);
  // distance exactly 5, representable without rounding
  CHECK(success_indicator({0.0, 0.0}, {3.0, 4.0}, 5.0) == 1);
  CHECK(success_indicator({0.0, 0.0}, {3.0, 4.0}, 4.999) == 0);
  CHECK(success_indicator({0.0, 0.0}, {1.0, 0.0}, 0.05) == 0);
  CHECK_THROWS(success_indicator({0.0, 0.0}, {0.0, 0.0}, -0.01));
}

TEST_CASE("replaying sampled goal policies scores a perfect rate") {
  for (EnvironmentKind kind :
       {EnvironmentKind::kArm, EnvironmentKind::kPusherLinear,
        EnvironmentKind::kPusherDmp, EnvironmentKind::kColor}) {
    for (ObservationMode mode :
         {ObservationMode::kGroundTruth, ObservationMode::kImage}) {
      auto env = make_environment(kind, mode);
      Rng rng(2024);
      const std::vector<TestGoal> goals = sample_test_goals(*env, 20, rng);
      REQUIRE(goals.size() == 20);
      const double rate = success_rate(
          goals, *env, 0.05, [](const TestGoal& g) { return g.policy; });
      CHECK(rate == 1.0);
    }
  }
}

TEST_CASE("a stroke that always misses only satisfies resting goals") {
  LinearPusherEnvironment env(ObservationMode::kGroundTruth);
  Rng rng(5);
  const std::vector<TestGoal> goals = sample_test_goals(env, 50, rng);
  // the object stays at the center, so the rate must be exactly the
  // fraction of goals that happen to sit within epsilon of the center
  int resting_goals = 0;
  for (const TestGoal& g : goals) {
    resting_goals += success_indicator(g.state, kWorkspaceCenter, 0.05);
  }
  REQUIRE(resting_goals < 5);  // most sampled goals actually move the object
  const double rate =
      success_rate(goals, env, 0.05, [](const TestGoal&) {
        return PolicyParams{0.0, 0.0, 0.1, 0.0};  // far from the object
      });
  CHECK(rate == static_cast<double>(resting_goals) / 50.0);
}

TEST_CASE("success rate counts exactly the successful goals") {
  ArmEnvironment env(ObservationMode::kGroundTruth);
  Rng rng(8);
  const std::vector<TestGoal> goals = sample_test_goals(env, 40, rng);
  Repertoire rep;
  rep.add(env.execute(env.seed_policy()), env.seed_policy());
  // with one stored policy every query executes the same motion, so the
  // rate must equal the directly counted indicator average
  const Vec2 achieved = env.last_state();
  int hits = 0;
  for (const TestGoal& g : goals) {
    hits += success_indicator(g.state, achieved, 0.05);
  }
  const double rate = success_rate(goals, env, 0.05, ParameterizedSkill(rep));
  CHECK(rate == static_cast<double>(hits) / 40.0);
}

TEST_CASE("an empty goal set is rejected") {
  ArmEnvironment env(ObservationMode::kGroundTruth);
  CHECK_THROWS(success_rate({}, env, 0.05,
                            [](const TestGoal& g) { return g.policy; }));
}

TEST_CASE("dispersion of identical states is zero") {
  const std::vector<Vec2> states{{0.4, 0.4}, {0.4, 0.4}, {0.4, 0.4}};
  CHECK(dispersion(states) == 0.0);
}

TEST_CASE("dispersion of two states is their distance") {
  const std::vector<Vec2> states{{0.1, 0.5}, {0.5, 0.5}};
  CHECK(dispersion(states) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("dispersion matches a brute-force double loop") {
  Rng rng(14);
  std::vector<Vec2> states;
  for (int i = 0; i < 100; ++i) {
    states.push_back({rng.uniform(), rng.uniform()});
  }
  double total = 0.0;
  int pairs = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      total += distance(states[i], states[j]);
      ++pairs;
    }
  }
  CHECK(dispersion(states) == doctest::Approx(total / pairs).epsilon(1e-12));
}

TEST_CASE("dispersion needs at least two states") {
  CHECK_THROWS_AS(dispersion(std::vector<Vec2>{}), InsufficientDataError);
  CHECK_THROWS_AS(dispersion(std::vector<Vec2>{{0.5, 0.5}}),
                  InsufficientDataError);
}

TEST_CASE("repertoire dispersion equals recorded-state dispersion") {
  ArmEnvironment env(ObservationMode::kGroundTruth);
  AgmeConfig cfg;
  cfg.sigma = {0.15, 0.15, 0.15};
  cfg.trials = 80;
  cfg.rng_seed = 21;
  const ExplorationResult result = agme_run(env, cfg);
  ArmEnvironment fresh(ObservationMode::kGroundTruth);
  CHECK(dispersion(result.repertoire, fresh) == dispersion(result.states));
}

TEST_CASE("evaluation does not perturb a training environment") {
  // evaluating against a clone mid-run must not change the trajectory
  ArmEnvironment env_plain(ObservationMode::kGroundTruth);
  AgmeConfig cfg;
  cfg.sigma = {0.15, 0.15, 0.15};
  cfg.trials = 60;
  cfg.rng_seed = 33;
  const ExplorationResult plain = agme_run(env_plain, cfg);

  ArmEnvironment env_hooked(ObservationMode::kGroundTruth);
  Rng goal_rng(909);
  ArmEnvironment goal_env(ObservationMode::kGroundTruth);
  const std::vector<TestGoal> goals = sample_test_goals(goal_env, 10, goal_rng);
  const std::vector<int> hook_trials{0, 20, 40, 60};
  const ExplorationResult hooked = agme_run(
      env_hooked, cfg, hook_trials,
      [&](int, const Repertoire& rep, std::span<const Vec2>) {
        auto eval_env = env_hooked.clone();
        success_rate(goals, *eval_env, 0.05, ParameterizedSkill(rep));
      });
  CHECK(plain.repertoire == hooked.repertoire);
}
