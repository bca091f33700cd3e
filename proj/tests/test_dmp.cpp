#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"

#include "agme/dmp.hpp"
#include "agme/rng.hpp"

using namespace agme;

namespace {

DmpParams zero_weights(Vec2 start, Vec2 goal) {
  DmpParams p;
  p.start = start;
  p.goal = goal;
  return p;
}

DmpParams random_params(Rng& rng, double weight_range) {
  DmpParams p;
  for (double& w : p.weights_x) w = rng.uniform(-weight_range, weight_range);
  for (double& w : p.weights_y) w = rng.uniform(-weight_range, weight_range);
  p.goal = {rng.uniform(), rng.uniform()};
  p.start = {0.5, 0.1};
  return p;
}

// same continuous system integrated at a finer step
DmpIntegrationSpec refined(const DmpIntegrationSpec& spec, int factor) {
  DmpIntegrationSpec fine = spec;
  fine.dt = spec.dt / factor;
  fine.steps = spec.steps * factor;
  return fine;
}

double lateral_deviation(const std::vector<Vec2>& path, Vec2 start, Vec2 goal) {
  double max_dev = 0.0;
  for (const Vec2& p : path) {
    max_dev = std::max(max_dev, point_segment_distance(p, start, goal));
  }
  return max_dev;
}

}  // namespace

TEST_CASE("default integration constants") {
  const auto spec = DmpIntegrationSpec::defaults();
  CHECK(spec.beta_z == doctest::Approx(spec.alpha_z / 4.0));  // critical damping
  CHECK(spec.centers[0] == doctest::Approx(1.0));             // phase starts at 1
  for (int i = 1; i < kDmpBasisCount; ++i) {
    CHECK(spec.centers[i] < spec.centers[i - 1]);  // decaying phase ordering
    CHECK(spec.widths[i] > 0.0);
  }
  // the discrete phase decays below 0.01 over the horizon
  double s = 1.0;
  for (int step = 0; step < spec.steps; ++step) s += spec.dt * (-spec.alpha_s * s);
  CHECK(s < 0.01);
  CHECK(s > 0.0);
}

TEST_CASE("zero forcing converges to the goal") {
  const auto spec = DmpIntegrationSpec::defaults();
  const auto path = dmp_rollout(zero_weights({0.5, 0.1}, {0.3, 0.7}), spec);
  REQUIRE(path.size() == static_cast<std::size_t>(spec.steps) + 1);
  CHECK(path.front().x == 0.5);
  CHECK(path.front().y == 0.1);
  CHECK(distance(path.back(), {0.3, 0.7}) < 0.01);
}

TEST_CASE("goal equal to start stays put") {
  const auto spec = DmpIntegrationSpec::defaults();
  const auto path = dmp_rollout(zero_weights({0.4, 0.4}, {0.4, 0.4}), spec);
  for (const Vec2& p : path) {
    CHECK(distance(p, {0.4, 0.4}) < 1e-6);
  }
}

TEST_CASE("zero forcing approach is monotone after the transient") {
  const auto spec = DmpIntegrationSpec::defaults();
  const Vec2 goal{0.8, 0.6};
  const auto path = dmp_rollout(zero_weights({0.5, 0.1}, goal), spec);
  for (std::size_t i = 10; i + 1 < path.size(); ++i) {
    CHECK(distance(path[i + 1], goal) <= distance(path[i], goal) + 1e-12);
  }
}

TEST_CASE("forcing bends the path but the goal still wins") {
  const auto spec = DmpIntegrationSpec::defaults();
  const Vec2 start{0.5, 0.1};
  const Vec2 goal{0.5, 0.9};
  DmpParams bent = zero_weights(start, goal);
  bent.weights_x = {50.0, 0.0, 0.0, 0.0, 0.0};
  const auto straight_path = dmp_rollout(zero_weights(start, goal), spec);
  const auto bent_path = dmp_rollout(bent, spec);
  CHECK(distance(bent_path.back(), goal) < 0.02);
  CHECK(lateral_deviation(bent_path, start, goal) >
        lateral_deviation(straight_path, start, goal));
  // agreement with the same system integrated ten times finer
  const auto fine_path = dmp_rollout(bent, refined(spec, 10));
  CHECK(distance(bent_path.back(), fine_path.back()) < 2e-3);
}

TEST_CASE("bounded weights keep the endpoint near the goal") {
  const auto spec = DmpIntegrationSpec::defaults();
  Rng rng(2718);
  for (int rep = 0; rep < 100; ++rep) {
    const DmpParams p = random_params(rng, 100.0);
    const auto path = dmp_rollout(p, spec);
    CHECK(distance(path.back(), p.goal) < 0.02);
  }
}

TEST_CASE("halving the step barely moves the endpoint") {
  const auto spec = DmpIntegrationSpec::defaults();
  const auto fine = refined(spec, 2);
  Rng rng(3141);
  for (int rep = 0; rep < 50; ++rep) {
    const DmpParams p = random_params(rng, 100.0);
    const Vec2 coarse_end = dmp_rollout(p, spec).back();
    const Vec2 fine_end = dmp_rollout(p, fine).back();
    CHECK(distance(coarse_end, fine_end) < 1e-3);
  }
}

TEST_CASE("non-finite parameters are rejected") {
  const auto spec = DmpIntegrationSpec::defaults();
  DmpParams p = zero_weights({0.5, 0.1}, {0.5, 0.9});
  p.weights_x[2] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(dmp_rollout(p, spec), std::invalid_argument);
  p = zero_weights({0.5, 0.1}, {0.5, 0.9});
  p.goal.x = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(dmp_rollout(p, spec), std::invalid_argument);
}
