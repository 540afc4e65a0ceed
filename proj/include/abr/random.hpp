#pragma once

#include <cstdint>
#include <random>

#include "abr/rational.hpp"

namespace abr {

/// Seeded generator whose output depends only on the seed. The standard
/// distributions are implementation-defined, so sampling is done here on
/// the raw mt19937_64 stream, which the standard fixes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// p/q with |p| <= 2^bits and 1 <= q <= 2^bits.
  Rational rational(int bits) {
    const std::int64_t m = std::int64_t{1} << bits;
    Rational q(Integer(static_cast<long>(between(-m, m))), Integer(static_cast<long>(between(1, m))));
    q.canonicalize();
    return q;
  }

  /// p/q with 1 <= p, q <= 2^bits.
  Rational positive_rational(int bits) {
    const std::int64_t m = std::int64_t{1} << bits;
    Rational q(Integer(static_cast<long>(between(1, m))), Integer(static_cast<long>(between(1, m))));
    q.canonicalize();
    return q;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace abr
