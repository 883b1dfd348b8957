#pragma once

#include <cstdint>
#include <random>

#include "bqkz/rational.hpp"

namespace bqkz {

/// Deterministic sampler of small-height rationals.
///
/// Bounded draws are done by rejection on the raw 64-bit stream so the
/// sequence is identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t r;
    do {
      r = gen_();
    } while (r >= limit);
    return r % n;
  }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  /// Nonzero rational p/d with |p|, d <= height.
  Rational rational(long height = 40) {
    long p = 0;
    while (p == 0) p = range(-height, height);
    return {p, range(1, height)};
  }
  /// Nonzero rational different from +-1.
  Rational generic_rational(long height = 40) {
    while (true) {
      Rational r = rational(height);
      if (!(r.abs() == Rational(1))) return r;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace bqkz
