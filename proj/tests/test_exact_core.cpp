#include <doctest.h>

#include <algorithm>
#include <random>

#include "degfusion/linalg.hpp"
#include "degfusion/polynomial.hpp"
#include "degfusion/qseries.hpp"
#include "oracles.hpp"

using namespace degfusion;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

Polynomial1 random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& v : c) v = oracle::random_rational(rng);
  return Polynomial1(c);
}

Polynomial2 random_poly2(std::mt19937& rng) {
  Polynomial2 p;
  std::uniform_int_distribution<int> d(0, 3);
  for (int k = 0; k < 4; ++k) {
    Polynomial2 term(oracle::random_rational(rng));
    for (int i = d(rng); i > 0; --i) term *= Polynomial2::x();
    for (int i = d(rng); i > 0; --i) term *= Polynomial2::y();
    p += term;
  }
  return p;
}

QSeries random_series(std::mt19937& rng, const Rational& order) {
  std::uniform_int_distribution<int> e(0, 40), c(-5, 5);
  QSeries s(0, order);
  for (int k = 0; k < 10; ++k) s.add_term(R(e(rng), 4), c(rng));
  return s;
}

}  // namespace

TEST_SUITE("exact-core") {
  TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("-19/16")) == "-19/16");
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(R(3)) == "3");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(floor(R(-1, 2)) == -1);
    CHECK(to_string(parse_half_int("-3/2")) == "-3/2");
  }

  TEST_CASE("rational_roots examples") {
    const Polynomial1 x = Polynomial1::x();
    auto roots = rational_roots(x * x - x);
    CHECK(roots == std::map<Rational, int>{{R(0), 1}, {R(1), 1}});

    const Polynomial1 p({R(9, 64), R(-19, 16), R(11, 4), R(-1)});
    CHECK(rational_roots(p) == std::map<Rational, int>{{R(1, 4), 2}, {R(9, 4), 1}});

    CHECK(rational_roots(Polynomial1(R(5))).empty());
    CHECK_THROWS_WITH_AS(rational_roots(Polynomial1()), "zero polynomial has no root set", std::domain_error);
  }

  TEST_CASE("rational_roots of products is the multiset union") {
    std::mt19937 rng(7);
    const Polynomial1 x = Polynomial1::x();
    for (int trial = 0; trial < 60; ++trial) {
      std::map<Rational, int> expected;
      Polynomial1 p(oracle::random_rational(rng, 5) + R(11, 2));  // nonzero
      std::uniform_int_distribution<int> count(0, 6);
      for (int k = count(rng); k > 0; --k) {
        const Rational r = oracle::random_rational(rng, 12, 8);
        p *= Polynomial1::linear_factor(r);
        expected[r] += 1;
      }
      // Irrational and complex factors contribute nothing.
      if (trial % 3 == 0) p *= x * x - R(2);
      if (trial % 3 == 1) p *= x * x + R(1, 3);
      CHECK(rational_roots(p) == expected);
    }
  }

  TEST_CASE("polynomial ring axioms") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      const auto a2 = random_poly2(rng), b2 = random_poly2(rng), c2 = random_poly2(rng);
      CHECK((a2 + b2) + c2 == a2 + (b2 + c2));
      CHECK(a2 * (b2 + c2) == a2 * b2 + a2 * c2);
      if (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
      }
    }
  }

  TEST_CASE("polynomial basics") {
    const Polynomial1 x = Polynomial1::x();
    CHECK(Polynomial1().degree() == -1);
    CHECK((x - x).is_zero());
    CHECK((x * x - R(1)).derivative() == R(2) * x);
    CHECK(gcd(x * x - R(1), x * x + R(2) * x + R(1)) == x + R(1));
    CHECK(proportional(R(3) * x - R(3, 2), x - R(1, 2)));
    CHECK_FALSE(proportional(x, x + R(1)));
    CHECK((x - R(1, 2))(R(1, 2)) == 0);
  }

  TEST_CASE("specialize_y examples") {
    const Polynomial2 x = Polynomial2::x(), y = Polynomial2::y();
    const Polynomial1 px = Polynomial1::x();
    CHECK(specialize_y(R(2) * y - x + R(1, 4), R(1, 4)) == R(3, 4) - px);
    CHECK(specialize_y((y - x) * (y - x + R(1)), 0) == px * px - px);
    CHECK(specialize_y(Polynomial2(R(1)), R(7, 3)) == Polynomial1(R(1)));
    CHECK(Polynomial2::affine(2, -1, R(1, 4)) == R(2) * y - x + R(1, 4));
  }

  TEST_CASE("euler_inverse matches partition enumeration") {
    const QSeries e5 = euler_inverse(5);
    const std::vector<long> first{1, 1, 2, 3, 5, 7};
    for (int k = 0; k <= 5; ++k) CHECK(e5.coefficient(k) == first[k]);
    CHECK(e5.coefficient(6) == 0);  // beyond the bound
    CHECK(euler_inverse(0).terms().size() == 1);

    const QSeries e = euler_inverse(30);
    for (int k = 0; k <= 30; ++k) CHECK(e.coefficient(k) == oracle::count_partitions(k, k));

    // times prod (1 - q^n) is 1
    QSeries prod = QSeries::monomial(0, 1, 30);
    for (int n = 1; n <= 30; ++n) prod = prod * (QSeries::monomial(0, 1, 30) - QSeries::monomial(n, 1, 30 - n));
    const QSeries one = e * prod;
    CHECK(one.terms().size() == 1);
    CHECK(one.coefficient(0) == 1);
  }

  TEST_CASE("ns_denominator") {
    const QSeries d = ns_denominator(R(3, 2));
    CHECK(d.coefficient(0) == 1);
    CHECK(d.coefficient(R(1, 2)) == 1);
    CHECK(d.coefficient(R(3, 2)) == 2);
    const QSeries big = ns_denominator(8);
    for (int t = 0; t <= 16; ++t) CHECK(big.coefficient(R(t, 2)) == oracle::count_ns_words(t));
  }

  TEST_CASE("q-series ring axioms and truncation") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = random_series(rng, 8), b = random_series(rng, 8), c = random_series(rng, 8);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
    }
    QSeries s(R(1, 4), 2);
    s.add_term(R(1, 4), 3);
    s.add_term(R(9, 4), 1);
    s.add_term(R(5, 2), 1);  // above offset + order: dropped
    CHECK(s.terms().size() == 2);
    CHECK(s.bound() == R(9, 4));
    CHECK_THROWS_AS(s.add_term(R(1, 3), 1), std::invalid_argument);
    CHECK(s.shifted(1).coefficient(R(5, 4)) == 3);
    CHECK(s.truncated(1).terms().size() == 1);
  }

  TEST_CASE("nullspace, rank and determinant") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
      std::uniform_int_distribution<int> size(1, 6);
      const std::size_t rows = size(rng), cols = size(rng);
      RationalMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = trial % 2 ? oracle::random_rational(rng, 2, 2) : Rational(r * c % 3);
      const auto ns = nullspace(m);
      CHECK(ns.size() + rank(m) == cols);
      for (const auto& v : ns)
        for (std::size_t r = 0; r < rows; ++r) {
          Rational s = 0;
          for (std::size_t c = 0; c < cols; ++c) s += m(r, c) * v[c];
          CHECK(s == 0);
        }
    }
    // Cofactor expansion oracle on 3x3.
    for (int trial = 0; trial < 20; ++trial) {
      RationalMatrix m(3, 3);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = oracle::random_rational(rng);
      const Rational cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
      CHECK(determinant(m) == cof);
      CHECK((rank(m) == 3) == (cof != 0));
    }
    CHECK(determinant(RationalMatrix(0, 0)) == 1);
  }
}
