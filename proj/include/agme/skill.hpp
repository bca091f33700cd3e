#pragma once

#include "agme/repertoire.hpp"

namespace agme {

// Goal-to-policy mapping over a repertoire: returns the policy of the
// most similar discovered outcome (1-nearest-neighbor retrieval). Holds
// a read-only view; never mutates the repertoire.
class ParameterizedSkill {
 public:
  explicit ParameterizedSkill(const Repertoire& repertoire)
      : repertoire_(&repertoire) {}

  const PolicyParams& query(const SensorVector& goal) const;

  const Repertoire& repertoire() const { return *repertoire_; }

 private:
  const Repertoire* repertoire_;
};

}  // namespace agme
