#include "agme/skill.hpp"

namespace agme {

const PolicyParams& ParameterizedSkill::query(const SensorVector& goal) const {
  if (repertoire_->empty()) {
    throw EmptyRepertoireError("ParameterizedSkill::query: empty repertoire");
  }
  return repertoire_->policy(repertoire_->nearest(goal));
}

}  // namespace agme
