#pragma once

#include <cstdint>

namespace g2c {

/// 64-bit mixed congruential generator
///   s <- 6364136223846793005 * s + 1442695040888963407  (mod 2^64),
/// emitting the raw state. Chosen for bit-exact reproducibility across
/// implementations; draws in [0, n) reduce the output modulo n.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = 6364136223846793005ull * state_ + 1442695040888963407ull;
    return state_;
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Integer in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace g2c
