#include "agme/manifold_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace agme {

namespace {

using Candidate = std::pair<double, std::size_t>;

// Inserts cand into the sorted list if it belongs among the k smallest
// (distance, index) pairs; returns whether the list changed. Lexicographic
// pair order makes equal distances resolve to the lowest index.
bool consider(std::vector<Candidate>& list, const Candidate& cand, int k) {
  if (list.size() < static_cast<std::size_t>(k)) {
    list.insert(std::upper_bound(list.begin(), list.end(), cand), cand);
    return true;
  }
  if (cand < list.back()) {
    list.pop_back();
    list.insert(std::upper_bound(list.begin(), list.end(), cand), cand);
    return true;
  }
  return false;
}

NeighborStats stats_from(const std::vector<Candidate>& nb) {
  NeighborStats s;
  s.neighbor_indices.reserve(nb.size());
  double sum = 0.0;
  for (const auto& [d, j] : nb) {
    s.neighbor_indices.push_back(j);
    sum += d;
  }
  s.avg_distance = nb.empty() ? 0.0 : sum / static_cast<double>(nb.size());
  return s;
}

}  // namespace

std::vector<NeighborStats> knn_stats(const std::vector<SensorVector>& outcomes,
                                     int k) {
  if (k < 1) throw std::invalid_argument("knn_stats: k must be >= 1");
  const std::size_t n = outcomes.size();
  if (n < 2) {
    throw InsufficientDataError("knn_stats: need at least 2 outcomes, have " +
                                std::to_string(n));
  }
  std::vector<NeighborStats> result(n);
  std::vector<Candidate> nb;
  for (std::size_t i = 0; i < n; ++i) {
    nb.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      consider(nb, {euclidean_distance(outcomes[i], outcomes[j]), j}, k);
    }
    result[i] = stats_from(nb);
  }
  return result;
}

std::size_t select_basis(const std::vector<NeighborStats>& stats) {
  if (stats.empty()) {
    throw InsufficientDataError("select_basis: empty stats");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < stats.size(); ++i) {
    if (stats[i].avg_distance > stats[best].avg_distance) best = i;
  }
  return best;
}

NeighborTracker::NeighborTracker(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("NeighborTracker: k must be >= 1");
}

double NeighborTracker::list_avg(const NeighborList& list) const {
  // Summing in sorted order keeps the value identical to the batch path.
  double sum = 0.0;
  for (const auto& [d, j] : list) sum += d;
  return list.empty() ? 0.0 : sum / static_cast<double>(list.size());
}

void NeighborTracker::append(const std::vector<SensorVector>& outcomes) {
  const std::size_t n = nearest_.size();
  if (outcomes.size() != n + 1) {
    throw std::invalid_argument(
        "NeighborTracker::append: expected " + std::to_string(n + 1) +
        " outcomes, got " + std::to_string(outcomes.size()));
  }
  NeighborList own;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = euclidean_distance(outcomes[n], outcomes[j]);
    consider(own, {d, j}, k_);
    if (consider(nearest_[j], {d, n}, k_)) {
      avg_[j] = list_avg(nearest_[j]);
    }
  }
  avg_.push_back(list_avg(own));
  nearest_.push_back(std::move(own));
}

std::vector<NeighborStats> NeighborTracker::stats() const {
  if (size() < 2) {
    throw InsufficientDataError("NeighborTracker::stats: need at least 2");
  }
  std::vector<NeighborStats> result(size());
  for (std::size_t i = 0; i < size(); ++i) {
    result[i] = stats_from(nearest_[i]);
  }
  return result;
}

std::size_t NeighborTracker::select() const {
  if (nearest_.empty()) {
    throw InsufficientDataError("NeighborTracker::select: no outcomes");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < avg_.size(); ++i) {
    if (avg_[i] > avg_[best]) best = i;
  }
  return best;
}

}  // namespace agme
