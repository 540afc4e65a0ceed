#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace abr {

// GMP keeps mpq_class canonical after every arithmetic operation
// (positive denominator, reduced fraction).
using Integer = mpz_class;
using Rational = mpq_class;

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(const Rational& q) {
  const int s = sgn(q);
  return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero);
}

inline Sign sign_of(const Integer& z) {
  const int s = sgn(z);
  return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero);
}

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

/// Parses "p/q", "-p/q" or an integer "p" in decimal. Rejects zero
/// denominators, signs on the denominator, whitespace and empty parts.
/// Throws InvariantError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; q is always written, so 5 becomes "5/1".
std::string to_string(const Rational& q);

Rational make_rational(long numerator, long denominator = 1);

}  // namespace abr
