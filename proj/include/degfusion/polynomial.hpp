#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "degfusion/rational.hpp"

namespace degfusion {

/// Dense univariate polynomial in x over the rationals. The highest stored
/// coefficient is nonzero; the zero polynomial has no coefficients.
class Polynomial1 {
 public:
  Polynomial1() = default;
  explicit Polynomial1(std::vector<Rational> coefficients);
  Polynomial1(const Rational& constant);  // NOLINT: implicit scalar promotion

  static Polynomial1 x();
  /// x - root
  static Polynomial1 linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t power) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const;

  Rational operator()(const Rational& at) const;

  Polynomial1& operator+=(const Polynomial1& rhs);
  Polynomial1& operator-=(const Polynomial1& rhs);
  Polynomial1& operator*=(const Polynomial1& rhs);
  Polynomial1& operator*=(const Rational& scalar);
  friend Polynomial1 operator+(Polynomial1 a, const Polynomial1& b) { return a += b; }
  friend Polynomial1 operator-(Polynomial1 a, const Polynomial1& b) { return a -= b; }
  friend Polynomial1 operator*(Polynomial1 a, const Polynomial1& b) { return a *= b; }
  friend Polynomial1 operator*(Polynomial1 a, const Rational& s) { return a *= s; }
  friend Polynomial1 operator*(const Rational& s, Polynomial1 a) { return a *= s; }
  Polynomial1 operator-() const;
  friend bool operator==(const Polynomial1&, const Polynomial1&) = default;

  Polynomial1 derivative() const;
  /// Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial1 monic() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a / b; b must be nonzero.
std::pair<Polynomial1, Polynomial1> divmod(const Polynomial1& a, const Polynomial1& b);
Polynomial1 gcd(Polynomial1 a, Polynomial1 b);

/// True when a = k*b for some nonzero rational k (both zero counts as true).
bool proportional(const Polynomial1& a, const Polynomial1& b);

/// Every rational root with its exact multiplicity. Irrational and complex
/// roots are ignored. Throws std::domain_error for the zero polynomial.
std::map<Rational, int> rational_roots(const Polynomial1& p);

/// Bivariate polynomial in x, y over the rationals; sparse, no stored zeros.
class Polynomial2 {
 public:
  using Exponents = std::pair<int, int>;  // (deg x, deg y)

  Polynomial2() = default;
  Polynomial2(const Rational& constant);  // NOLINT: implicit scalar promotion

  static Polynomial2 x();
  static Polynomial2 y();
  /// a*y + b*x + c
  static Polynomial2 affine(const Rational& a, const Rational& b, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int deg_x, int deg_y) const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  int total_degree() const;

  Polynomial2& operator+=(const Polynomial2& rhs);
  Polynomial2& operator-=(const Polynomial2& rhs);
  Polynomial2& operator*=(const Polynomial2& rhs);
  Polynomial2& operator*=(const Rational& scalar);
  friend Polynomial2 operator+(Polynomial2 a, const Polynomial2& b) { return a += b; }
  friend Polynomial2 operator-(Polynomial2 a, const Polynomial2& b) { return a -= b; }
  friend Polynomial2 operator*(Polynomial2 a, const Polynomial2& b) { return a *= b; }
  friend Polynomial2 operator*(Polynomial2 a, const Rational& s) { return a *= s; }
  friend Polynomial2 operator*(const Rational& s, Polynomial2 a) { return a *= s; }
  friend bool operator==(const Polynomial2&, const Polynomial2&) = default;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

/// Substitutes y = value exactly.
Polynomial1 specialize_y(const Polynomial2& p, const Rational& value);

}  // namespace degfusion
