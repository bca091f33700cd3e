#include "agme/environments.hpp"

#include <algorithm>
#include <cmath>

namespace agme {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

SensorVector state_observation(const Vec2& s) { return {s.x, s.y}; }

void check_policy_dim(const PolicyParams& policy, std::size_t expected,
                      const char* env) {
  if (policy.size() != expected) {
    throw DimensionError(std::string(env) + ": policy has dimension " +
                         std::to_string(policy.size()) + ", expected " +
                         std::to_string(expected));
  }
}

}  // namespace

std::string to_string(ObservationMode mode) {
  return mode == ObservationMode::kGroundTruth ? "ground_truth" : "image";
}

ObservationMode observation_mode_from_string(const std::string& s) {
  if (s == "ground_truth") return ObservationMode::kGroundTruth;
  if (s == "image") return ObservationMode::kImage;
  throw ConfigError("unknown observation mode '" + s + "'");
}

std::string to_string(EnvironmentKind kind) {
  switch (kind) {
    case EnvironmentKind::kArm: return "arm";
    case EnvironmentKind::kPusherLinear: return "pusher_linear";
    case EnvironmentKind::kPusherDmp: return "pusher_dmp";
    case EnvironmentKind::kColor: return "color";
  }
  return "?";
}

EnvironmentKind environment_kind_from_string(const std::string& s) {
  if (s == "arm") return EnvironmentKind::kArm;
  if (s == "pusher_linear") return EnvironmentKind::kPusherLinear;
  if (s == "pusher_dmp") return EnvironmentKind::kPusherDmp;
  if (s == "color") return EnvironmentKind::kColor;
  throw ConfigError("unknown environment '" + s + "'");
}

std::unique_ptr<Environment> make_environment(EnvironmentKind kind,
                                              ObservationMode mode) {
  switch (kind) {
    case EnvironmentKind::kArm:
      return std::make_unique<ArmEnvironment>(mode);
    case EnvironmentKind::kPusherLinear:
      return std::make_unique<LinearPusherEnvironment>(mode);
    case EnvironmentKind::kPusherDmp:
      return std::make_unique<DmpPusherEnvironment>(mode);
    case EnvironmentKind::kColor:
      return std::make_unique<ColorEnvironment>(mode);
  }
  throw ConfigError("unknown environment kind");
}

// ---------------------------------------------------------------- arm --

std::array<Vec2, ArmEnvironment::kJointCount> ArmEnvironment::forward_kinematics(
    const PolicyParams& joints) {
  check_policy_dim(joints, kJointCount, "arm");
  std::array<Vec2, kJointCount> tips;
  Vec2 p = kWorkspaceCenter;
  double heading = 0.0;  // joint 1 measured from the +x axis
  for (int i = 0; i < kJointCount; ++i) {
    heading += std::clamp(joints[i], -kJointLimit, kJointLimit);
    p = p + Vec2{std::cos(heading), std::sin(heading)} * kLinkLength;
    tips[i] = p;
  }
  return tips;
}

SensorVector ArmEnvironment::execute(const PolicyParams& policy) {
  const auto tips = forward_kinematics(policy);
  last_state_ = tips[kJointCount - 1];
  if (mode_ == ObservationMode::kGroundTruth) {
    return state_observation(last_state_);
  }
  return render_arm(kWorkspaceCenter, {tips.begin(), tips.end()}).take_flat();
}

TestGoal ArmEnvironment::sample_test_goal(Rng& rng) {
  PolicyParams joints(kJointCount);
  for (double& j : joints) j = rng.uniform(-kJointLimit, kJointLimit);
  TestGoal goal;
  goal.observation = execute(joints);
  goal.state = last_state_;
  goal.policy = std::move(joints);
  return goal;
}

// ------------------------------------------------------- linear pusher --

SensorVector LinearPusherEnvironment::execute(const PolicyParams& policy) {
  check_policy_dim(policy, 4, "pusher_linear");
  const Vec2 p1{clamp01(policy[0]), clamp01(policy[1])};
  const Vec2 p2{clamp01(policy[2]), clamp01(policy[3])};
  Vec2 object = kWorkspaceCenter;  // object resets to the center each trial
  last_hit_ = segment_circle_hit(p1, p2, object, kObjectRadius).hit();
  if (last_hit_) object = p2;
  last_state_ = object;
  if (mode_ == ObservationMode::kGroundTruth) {
    return state_observation(object);
  }
  return render_object(object, kObjectRadius, kRed).take_flat();
}

TestGoal LinearPusherEnvironment::sample_test_goal(Rng& rng) {
  // end point uniform in the workspace, start point its reflection
  // through the center, so the stroke always crosses the object
  const Vec2 end{rng.uniform(), rng.uniform()};
  const Vec2 start = kWorkspaceCenter * 2.0 - end;
  TestGoal goal;
  goal.policy = {start.x, start.y, end.x, end.y};
  goal.observation = execute(goal.policy);
  goal.state = last_state_;
  return goal;
}

// ---------------------------------------------------------- dmp pusher --

DmpParams DmpPusherEnvironment::params_from_policy(const PolicyParams& policy) {
  check_policy_dim(policy, 2 * kDmpBasisCount + 2, "pusher_dmp");
  DmpParams p;
  for (int i = 0; i < kDmpBasisCount; ++i) {
    p.weights_x[i] = policy[i];
    p.weights_y[i] = policy[kDmpBasisCount + i];
  }
  p.goal = {clamp01(policy[2 * kDmpBasisCount]),
            clamp01(policy[2 * kDmpBasisCount + 1])};
  p.start = kStart;
  return p;
}

PolicyParams DmpPusherEnvironment::seed_policy() const {
  PolicyParams p(policy_dim(), 0.0);
  p[2 * kDmpBasisCount] = kWorkspaceCenter.x;  // straight stroke into the object
  p[2 * kDmpBasisCount + 1] = kWorkspaceCenter.y;
  return p;
}

SensorVector DmpPusherEnvironment::execute(const PolicyParams& policy) {
  const auto path = dmp_rollout(params_from_policy(policy), spec_);
  Vec2 object = kWorkspaceCenter;
  last_hit_ = false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (segment_circle_hit(path[i], path[i + 1], object, kObjectRadius).hit()) {
      last_hit_ = true;
      break;
    }
  }
  if (last_hit_) {
    object = {clamp01(path.back().x), clamp01(path.back().y)};
  }
  last_state_ = object;
  if (mode_ == ObservationMode::kGroundTruth) {
    return state_observation(object);
  }
  return render_object(object, kObjectRadius, kRed).take_flat();
}

TestGoal DmpPusherEnvironment::sample_test_goal(Rng& rng) {
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    PolicyParams policy(policy_dim());
    for (int i = 0; i < 2 * kDmpBasisCount; ++i) {
      policy[i] = rng.uniform(-50.0, 50.0);
    }
    policy[2 * kDmpBasisCount] = rng.uniform();
    policy[2 * kDmpBasisCount + 1] = rng.uniform();
    TestGoal goal;
    goal.observation = execute(policy);
    if (!last_hit_) continue;  // rollout missed the object
    goal.state = last_state_;
    goal.policy = std::move(policy);
    return goal;
  }
  throw SamplerExhaustedError(
      "pusher_dmp: no contact in 10000 sampled policies");
}

// ---------------------------------------------------------------- color --

SensorVector ColorEnvironment::execute(const PolicyParams& policy) {
  check_policy_dim(policy, 4, "color");
  const Vec2 p1{clamp01(policy[0]), clamp01(policy[1])};
  const Vec2 p2{clamp01(policy[2]), clamp01(policy[3])};
  const auto hit =
      segment_circle_hit(p1, p2, kWorkspaceCenter, kObjectRadius);
  last_color_ = kRed;  // color resets each trial
  if (hit.kind == HitKind::kBoundary) {
    const Vec2 rel = hit.point - kWorkspaceCenter;
    const double angle = std::atan2(rel.y, rel.x);
    last_color_ = hue_to_rgb(angle / (2.0 * kPi));
    last_state_ = hit.point;
  } else {
    last_state_ = kWorkspaceCenter;  // no boundary hit: sentinel state
  }
  if (mode_ == ObservationMode::kGroundTruth) {
    return state_observation(last_state_);
  }
  return render_object(kWorkspaceCenter, kObjectRadius, last_color_).take_flat();
}

TestGoal ColorEnvironment::sample_test_goal(Rng& rng) {
  // radial stroke toward the center, touching the boundary at angle phi
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const Vec2 dir{std::cos(phi), std::sin(phi)};
  const Vec2 start = kWorkspaceCenter + dir * (2.0 * kObjectRadius);
  TestGoal goal;
  goal.policy = {start.x, start.y, kWorkspaceCenter.x, kWorkspaceCenter.y};
  goal.observation = execute(goal.policy);
  goal.state = last_state_;
  return goal;
}

}  // namespace agme
