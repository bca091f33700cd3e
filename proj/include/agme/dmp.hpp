#pragma once

#include <array>
#include <vector>

#include "agme/geometry.hpp"

namespace agme {

inline constexpr int kDmpBasisCount = 5;

// Discrete point-attractor movement primitive over a 2-D workspace:
// five forcing weights per axis plus a goal point; the start point is
// fixed by the environment.
struct DmpParams {
  std::array<double, kDmpBasisCount> weights_x{};
  std::array<double, kDmpBasisCount> weights_y{};
  Vec2 goal{};
  Vec2 start{};
};

// Integration constants. beta_z = alpha_z/4 keeps the transformation
// system critically damped; steps*dt spans the full phase decay
// (s(T) < 0.01). The forcing term is not scaled by goal-start amplitude
// so the weight-to-deviation map stays well defined when goal ~ start.
struct DmpIntegrationSpec {
  double alpha_z = 25.0;
  double beta_z = 6.25;
  double alpha_s = 6.0;
  int steps = 100;
  double dt = 0.01;
  // Gaussian basis in phase: centers log-spaced over the phase decay,
  // widths set so each basis evaluates to ~0.55 at its neighbor's center.
  std::array<double, kDmpBasisCount> centers{};
  std::array<double, kDmpBasisCount> widths{};

  static DmpIntegrationSpec defaults();
};

// Explicit-Euler rollout; returns the steps+1 visited points including
// the start. Throws on non-finite parameters.
std::vector<Vec2> dmp_rollout(const DmpParams& params,
                              const DmpIntegrationSpec& spec);

}  // namespace agme
