#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qdeform::exact {

using BigInt = mpz_class;
/// Arbitrary-precision rational. Arithmetic keeps it canonical, but the two-argument
/// mpq_class constructor does not; build fractions with rat().
using BigRat = mpq_class;

inline BigRat rat(long num, long den) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "n" or "n/d" (optional sign). Decimal points and exponents are rejected:
/// exact modes never accept floats.
BigRat parse_rational(std::string_view text);

std::string to_string(const BigRat& value);

inline bool is_zero(const BigRat& value) { return sgn(value) == 0; }

}  // namespace qdeform::exact
