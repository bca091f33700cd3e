#pragma once

#include <array>
#include <memory>
#include <optional>

#include "agme/camera.hpp"
#include "agme/dmp.hpp"
#include "agme/environment.hpp"

namespace agme {

// Unit-square workspace shared by all environments.
inline constexpr Vec2 kWorkspaceCenter{0.5, 0.5};
inline constexpr double kObjectRadius = 0.1;

enum class EnvironmentKind { kArm, kPusherLinear, kPusherDmp, kColor };

std::string to_string(EnvironmentKind kind);
EnvironmentKind environment_kind_from_string(const std::string& s);
std::unique_ptr<Environment> make_environment(EnvironmentKind kind,
                                              ObservationMode mode);

// Planar 3-link arm, base at the workspace center, joints clamped to
// +-60 degrees, each link 0.15 units (total reach 0.45 keeps the arm
// inside the frame).
class ArmEnvironment : public Environment {
 public:
  static constexpr int kJointCount = 3;
  static constexpr double kLinkLength = 0.15;
  static constexpr double kJointLimit = 3.14159265358979323846 / 3.0;

  explicit ArmEnvironment(ObservationMode mode) : Environment(mode) {}

  std::string name() const override { return "arm"; }
  std::size_t policy_dim() const override { return kJointCount; }
  SensorVector execute(const PolicyParams& policy) override;
  PolicyParams seed_policy() const override { return {0.0, 0.0, 0.0}; }
  TestGoal sample_test_goal(Rng& rng) override;
  std::unique_ptr<Environment> clone() const override {
    return std::make_unique<ArmEnvironment>(*this);
  }

  // Joint positions along the chain for the (clamped) joint angles;
  // element i is the tip of link i.
  static std::array<Vec2, kJointCount> forward_kinematics(
      const PolicyParams& joints);
  static Vec2 end_point(const PolicyParams& joints) {
    return forward_kinematics(joints)[kJointCount - 1];
  }
};

// Circular object at the workspace center; a linear effector stroke
// (x1,y1)->(x2,y2) that crosses the object teleports it to the stroke
// end point.
class LinearPusherEnvironment : public Environment {
 public:
  explicit LinearPusherEnvironment(ObservationMode mode) : Environment(mode) {}

  std::string name() const override { return "pusher_linear"; }
  std::size_t policy_dim() const override { return 4; }
  SensorVector execute(const PolicyParams& policy) override;
  PolicyParams seed_policy() const override { return {0.2, 0.5, 0.5, 0.5}; }
  TestGoal sample_test_goal(Rng& rng) override;
  std::unique_ptr<Environment> clone() const override {
    return std::make_unique<LinearPusherEnvironment>(*this);
  }

  bool last_hit() const { return last_hit_; }

 private:
  bool last_hit_ = false;
};

// Same contact rule as the linear pusher but the stroke is a DMP rollout
// from a fixed start point; on contact the object teleports to the final
// rollout point. Policy layout: 5 x-weights, 5 y-weights, goal x, goal y.
class DmpPusherEnvironment : public Environment {
 public:
  static constexpr Vec2 kStart{0.5, 0.1};

  explicit DmpPusherEnvironment(ObservationMode mode)
      : Environment(mode), spec_(DmpIntegrationSpec::defaults()) {}

  std::string name() const override { return "pusher_dmp"; }
  std::size_t policy_dim() const override { return 2 * kDmpBasisCount + 2; }
  SensorVector execute(const PolicyParams& policy) override;
  PolicyParams seed_policy() const override;
  TestGoal sample_test_goal(Rng& rng) override;
  std::unique_ptr<Environment> clone() const override {
    return std::make_unique<DmpPusherEnvironment>(*this);
  }

  bool last_hit() const { return last_hit_; }
  const DmpIntegrationSpec& integration_spec() const { return spec_; }
  static DmpParams params_from_policy(const PolicyParams& policy);

 private:
  DmpIntegrationSpec spec_;
  bool last_hit_ = false;
};

// Touching the circle recolors it according to the boundary point that
// was hit (hue = hit angle / 2pi); the color resets to red every trial.
// The ground-truth outcome is the boundary hit point, or the center as a
// no-hit sentinel.
class ColorEnvironment : public Environment {
 public:
  explicit ColorEnvironment(ObservationMode mode) : Environment(mode) {}

  std::string name() const override { return "color"; }
  std::size_t policy_dim() const override { return 4; }
  SensorVector execute(const PolicyParams& policy) override;
  PolicyParams seed_policy() const override { return {1.0, 0.5, 0.5, 0.5}; }
  TestGoal sample_test_goal(Rng& rng) override;
  std::unique_ptr<Environment> clone() const override {
    return std::make_unique<ColorEnvironment>(*this);
  }

  Rgb last_color() const { return last_color_; }

 private:
  Rgb last_color_ = kRed;
};

}  // namespace agme
