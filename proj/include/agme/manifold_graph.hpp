#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "agme/types.hpp"

namespace agme {

// Per-outcome neighborhood summary: the indices of the k nearest other
// outcomes and their mean distance. When fewer than k others exist, all
// of them are used.
struct NeighborStats {
  std::vector<std::size_t> neighbor_indices;
  double avg_distance = 0.0;
};

// k-nearest-neighbor stats for every outcome, Euclidean distance, ties
// broken by lowest index. Requires k >= 1 and at least 2 outcomes.
std::vector<NeighborStats> knn_stats(const std::vector<SensorVector>& outcomes,
                                     int k);

// Index with the maximum average neighbor distance (the exploration
// frontier); ties broken by lowest index.
std::size_t select_basis(const std::vector<NeighborStats>& stats);

// Incrementally maintained neighbor graph for an append-only outcome set.
// Outcomes never change once stored, so streaming each new point through
// every existing neighbor list reproduces the from-scratch graph bit for
// bit while the per-trial cost drops from O(n^2) to O(n k) on top of the
// O(n D) distance row.
class NeighborTracker {
 public:
  explicit NeighborTracker(int k);

  // Registers the newest outcome (must be called once per append, in
  // insertion order: outcomes.size() == size() + 1).
  void append(const std::vector<SensorVector>& outcomes);

  std::size_t size() const { return nearest_.size(); }

  // Same result as knn_stats over the outcomes seen so far (size >= 2).
  std::vector<NeighborStats> stats() const;

  // Same result as select_basis(stats()); a lone outcome selects itself.
  std::size_t select() const;

 private:
  // sorted (distance, index) pairs, at most k per outcome
  using NeighborList = std::vector<std::pair<double, std::size_t>>;

  double list_avg(const NeighborList& list) const;

  int k_;
  std::vector<NeighborList> nearest_;
  std::vector<double> avg_;
};

}  // namespace agme
