#include "agme/repertoire.hpp"

#include <limits>

namespace agme {

void Repertoire::add(SensorVector outcome, PolicyParams policy) {
  if (empty()) {
    outcome_dim_ = outcome.size();
    policy_dim_ = policy.size();
  }
  if (outcome.size() != outcome_dim_) {
    throw DimensionError("Repertoire::add: outcome has dimension " +
                         std::to_string(outcome.size()) + ", expected " +
                         std::to_string(outcome_dim_));
  }
  if (policy.size() != policy_dim_) {
    throw DimensionError("Repertoire::add: policy has dimension " +
                         std::to_string(policy.size()) + ", expected " +
                         std::to_string(policy_dim_));
  }
  outcomes_.push_back(std::move(outcome));
  policies_.push_back(std::move(policy));
}

std::size_t Repertoire::nearest(const SensorVector& q) const {
  if (empty()) {
    throw EmptyRepertoireError("Repertoire::nearest: repertoire is empty");
  }
  std::size_t best = 0;
  double best_sq = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    const double sq = squared_distance(outcomes_[i], q);
    if (sq < best_sq) {
      best_sq = sq;
      best = i;
    }
  }
  return best;
}

}  // namespace agme
