#pragma once

#include <cstdint>
#include <random>

namespace agme {

// Seeded generator with explicit stream splitting. Each replicate owns
// independent streams (training, evaluation) derived from one seed, so
// interleaving evaluations never perturbs the training trajectory.
// Uniform and Gaussian draws are implemented here rather than through
// std distributions to keep the draw sequence fully pinned.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix(seed)) {}

  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(mix(seed) ^ mix(0x9E3779B97F4A7C15ULL * (stream_id + 1)));
  }

  // in [0, 1)
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller; consumes exactly two uniforms
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  double gaussian(double sigma) { return sigma * gaussian(); }

  // uniform index in [0, n); modulo bias is < 2^-50 for the sizes used here
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(gen_() % n);
  }

  std::uint64_t raw() { return gen_(); }

 private:
  // splitmix64 finalizer, used to decorrelate seed/stream ids
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 gen_;
};

inline constexpr std::uint64_t kTrainingStream = 0;
inline constexpr std::uint64_t kEvalStream = 1;

}  // namespace agme
