#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "degfusion/rational.hpp"

namespace degfusion {

/// Truncated formal series sum c_e q^e with integer coefficients and exponents
/// in (1/8)Z. The series is known exactly for every exponent up to
/// offset + order; nothing beyond that bound is stored.
class QSeries {
 public:
  static constexpr int kExponentScale = 8;

  /// Zero series known up to offset + order.
  QSeries(const Rational& offset, const Rational& order);
  /// c * q^exponent, truncated at exponent + order.
  static QSeries monomial(const Rational& exponent, const Integer& coefficient, const Rational& order);

  const Rational& offset() const { return offset_; }
  const Rational& order() const { return order_; }
  Rational bound() const { return offset_ + order_; }

  Integer coefficient(const Rational& exponent) const;
  void add_term(const Rational& exponent, const Integer& coefficient);
  /// Nonzero terms in increasing exponent order.
  std::vector<std::pair<Rational, Integer>> terms() const;

  /// Drops terms above offset + new_order; new_order may only shrink.
  QSeries truncated(const Rational& new_order) const;
  /// Multiplies by q^shift (offset moves, order unchanged).
  QSeries shifted(const Rational& shift) const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const Integer& scalar);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Integer& s) { return a *= s; }

  /// Same bound and identical coefficients.
  friend bool operator==(const QSeries& a, const QSeries& b);

  std::string to_string() const;

 private:
  static long scaled(const Rational& exponent);
  long scaled_bound() const;

  Rational offset_;
  Rational order_;
  std::map<long, Integer> terms_;  // scaled exponent -> coefficient, no zeros
};

/// 1 / prod_{n>=1} (1 - q^n), coefficients = partition numbers.
QSeries euler_inverse(const Rational& order);
/// prod_{n>=1} (1 + q^{n-1/2}) / (1 - q^n).
QSeries ns_denominator(const Rational& order);

}  // namespace degfusion
