#pragma once

#include <memory>
#include <string>

#include "agme/geometry.hpp"
#include "agme/rng.hpp"
#include "agme/types.hpp"

namespace agme {

enum class ObservationMode { kGroundTruth, kImage };

std::string to_string(ObservationMode mode);
ObservationMode observation_mode_from_string(const std::string& s);

// A test goal together with the ground-truth state it corresponds to and
// the policy that generated it. Goals are produced by executing a sampled
// policy, so every test goal is achievable by construction.
struct TestGoal {
  SensorVector observation;
  Vec2 state{};
  PolicyParams policy;
};

// Executable world: policy in, outcome out. Execution always starts from
// a reset trial state and is deterministic, so re-executing a stored
// policy reproduces its stored outcome exactly.
class Environment {
 public:
  explicit Environment(ObservationMode mode) : mode_(mode) {}
  virtual ~Environment() = default;

  virtual std::string name() const = 0;
  virtual std::size_t policy_dim() const = 0;
  ObservationMode mode() const { return mode_; }
  std::size_t outcome_dim() const {
    return mode_ == ObservationMode::kGroundTruth ? 2 : 7500;
  }

  // Runs one trial; out-of-range parameters are clamped, not rejected.
  virtual SensorVector execute(const PolicyParams& policy) = 0;

  // Low-dimensional state of the most recent execution.
  Vec2 last_state() const { return last_state_; }

  // Fixed starting pair used to seed exploration.
  virtual PolicyParams seed_policy() const = 0;

  // Draws an achievable goal (observation in the current mode) plus its
  // ground-truth state and generating policy.
  virtual TestGoal sample_test_goal(Rng& rng) = 0;

  virtual std::unique_ptr<Environment> clone() const = 0;

 protected:
  ObservationMode mode_;
  Vec2 last_state_{};
};

}  // namespace agme
