#pragma once

#include <cstddef>
#include <vector>

#include "agme/types.hpp"

namespace agme {

// Paired store of achieved outcomes and the policies that produced them.
// Insertion order is preserved and duplicates are kept; index i always
// pairs outcome i with policy i.
class Repertoire {
 public:
  Repertoire() = default;

  // Dimensions are fixed by the first added pair.
  void add(SensorVector outcome, PolicyParams policy);

  std::size_t size() const { return outcomes_.size(); }
  bool empty() const { return outcomes_.empty(); }

  const SensorVector& outcome(std::size_t i) const { return outcomes_[i]; }
  const PolicyParams& policy(std::size_t i) const { return policies_[i]; }

  const std::vector<SensorVector>& outcomes() const { return outcomes_; }
  const std::vector<PolicyParams>& policies() const { return policies_; }

  // Index of the stored outcome closest to q (linear scan, ties broken
  // by lowest index). Throws EmptyRepertoireError when empty.
  std::size_t nearest(const SensorVector& q) const;

  bool operator==(const Repertoire& o) const {
    return outcomes_ == o.outcomes_ && policies_ == o.policies_;
  }

 private:
  std::vector<SensorVector> outcomes_;
  std::vector<PolicyParams> policies_;
  std::size_t outcome_dim_ = 0;
  std::size_t policy_dim_ = 0;
};

}  // namespace agme
