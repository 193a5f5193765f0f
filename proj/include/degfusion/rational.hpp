#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace degfusion {

/// Exact rational scalar; always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Half-integer stored as twice its value. Levels and mode indices use it.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_int(int n) { return HalfInt{2 * n}; }
  constexpr bool is_integer() const { return twice % 2 == 0; }
  Rational value() const { return make_rational(twice, 2); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

HalfInt parse_half_int(std::string_view text);
std::string to_string(HalfInt h);

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);
Integer floor(const Rational& r);

}  // namespace degfusion
