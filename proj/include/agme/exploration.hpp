#pragma once

#include <functional>
#include <span>
#include <vector>

#include "agme/geometry.hpp"
#include "agme/repertoire.hpp"

namespace agme {

// Invoked at scheduled trial numbers with the repertoire so far and the
// ground-truth state of every stored outcome (index-aligned).
using TrialCallback =
    std::function<void(int trial, const Repertoire&, std::span<const Vec2>)>;

struct ExplorationResult {
  Repertoire repertoire;
  std::vector<Vec2> states;  // ground-truth state per repertoire entry
};

}  // namespace agme
