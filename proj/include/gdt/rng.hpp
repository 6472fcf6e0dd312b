#pragma once

#include <cstdint>

namespace gdt {

// splitmix64 finalizer. Used to derive independent stream seeds, e.g. one
// per Monte Carlo trial, so results do not depend on execution order.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based generator (splitmix64). Deterministic for a given seed on
// every platform; cheap to fork by reseeding with mix64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 bits of precision.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n), n >= 1.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace gdt
