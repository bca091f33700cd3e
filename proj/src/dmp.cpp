#include "agme/dmp.hpp"

#include <cmath>
#include <stdexcept>

#include "agme/types.hpp"

namespace agme {

DmpIntegrationSpec DmpIntegrationSpec::defaults() {
  DmpIntegrationSpec spec;
  // centers at the phase values reached at equally spaced times
  const double horizon = spec.steps * spec.dt;
  for (int i = 0; i < kDmpBasisCount; ++i) {
    const double t = horizon * i / (kDmpBasisCount - 1);
    spec.centers[i] = std::exp(-spec.alpha_s * t);
  }
  for (int i = 0; i < kDmpBasisCount; ++i) {
    const double gap = (i + 1 < kDmpBasisCount)
                           ? spec.centers[i] - spec.centers[i + 1]
                           : spec.centers[i - 1] - spec.centers[i];
    spec.widths[i] = -std::log(0.55) / (gap * gap);
  }
  return spec;
}

namespace {

double forcing(const std::array<double, kDmpBasisCount>& weights, double s,
               const DmpIntegrationSpec& spec) {
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < kDmpBasisCount; ++i) {
    const double d = s - spec.centers[i];
    const double psi = std::exp(-spec.widths[i] * d * d);
    num += psi * weights[i];
    den += psi;
  }
  return s * num / den;  // den > 0: the first basis spans the whole phase
}

}  // namespace

std::vector<Vec2> dmp_rollout(const DmpParams& params,
                              const DmpIntegrationSpec& spec) {
  for (double w : params.weights_x) {
    if (!std::isfinite(w)) throw std::invalid_argument("dmp_rollout: non-finite weight");
  }
  for (double w : params.weights_y) {
    if (!std::isfinite(w)) throw std::invalid_argument("dmp_rollout: non-finite weight");
  }
  if (!std::isfinite(params.goal.x) || !std::isfinite(params.goal.y) ||
      !std::isfinite(params.start.x) || !std::isfinite(params.start.y)) {
    throw std::invalid_argument("dmp_rollout: non-finite endpoint");
  }

  std::vector<Vec2> path;
  path.reserve(static_cast<std::size_t>(spec.steps) + 1);

  double s = 1.0;
  Vec2 y = params.start;
  Vec2 v{0.0, 0.0};
  path.push_back(y);
  for (int step = 0; step < spec.steps; ++step) {
    const Vec2 f{forcing(params.weights_x, s, spec),
                 forcing(params.weights_y, s, spec)};
    // y'' = alpha_z*(beta_z*(g - y) - y') + f, explicit Euler
    const Vec2 accel{
        spec.alpha_z * (spec.beta_z * (params.goal.x - y.x) - v.x) + f.x,
        spec.alpha_z * (spec.beta_z * (params.goal.y - y.y) - v.y) + f.y};
    y = y + v * spec.dt;
    v = v + accel * spec.dt;
    s += spec.dt * (-spec.alpha_s * s);
    path.push_back(y);
  }
  return path;
}

}  // namespace agme
