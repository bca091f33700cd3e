#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace agme {

// A point in sensor/goal space: 2-D ground-truth state or a flattened
// 50x50 RGB image (7500 values, row-major, RGB interleaved per pixel).
using SensorVector = std::vector<double>;

// Flat parameter vector fully determining one policy execution.
using PolicyParams = std::vector<double>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyRepertoireError : std::logic_error {
  using std::logic_error::logic_error;
};

struct InsufficientDataError : std::logic_error {
  using std::logic_error::logic_error;
};

struct SamplerExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComparisonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Four-lane accumulation breaks the loop-carried dependency so the 7500-D
// image distances pipeline well; the lane split is fixed, so results are
// identical on every call.
inline double squared_distance(std::span<const double> a,
                               std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionError("squared_distance: length mismatch (" +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  }
  const double* pa = a.data();
  const double* pb = b.data();
  const std::size_t n = a.size();
  double s0 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const double d0 = pa[i] - pb[i];
    const double d1 = pa[i + 1] - pb[i + 1];
    const double d2 = pa[i + 2] - pb[i + 2];
    const double d3 = pa[i + 3] - pb[i + 3];
    s0 += d0 * d0;
    s1 += d1 * d1;
    s2 += d2 * d2;
    s3 += d3 * d3;
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    const double d = pa[i] - pb[i];
    tail += d * d;
  }
  return (s0 + s1) + (s2 + s3) + tail;
}

inline double euclidean_distance(std::span<const double> a,
                                 std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

}  // namespace agme
