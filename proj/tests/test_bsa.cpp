#include <doctest.h>

#include "degfusion/bsa.hpp"

using namespace degfusion;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

const CalibrationEntry& entry(const CalibrationReport& r, const std::string& name) {
  for (const auto& e : r.maps)
    if (e.name == name) return e;
  throw std::out_of_range(name);
}

CalibrationReport calibrate_vir(int q) {
  return calibrate(bsa_vir_c1(q), Flavor::Virasoro, 1, degenerate_weight(Flavor::Virasoro, q - 1),
                   HalfInt::from_int(q), q);
}

CalibrationReport calibrate_ns(int q) {
  return calibrate(bsa_ns(q), Flavor::NS, R(3, 2), degenerate_weight(Flavor::NS, q), HalfInt{q}, q);
}

}  // namespace

TEST_SUITE("bsa") {
  TEST_CASE("Virasoro closed form, small labels") {
    // q = 3: compositions (1,1,1), (1,2), (2,1), (3) with weights 1, 2, 2, 4.
    const AlgebraElement b3 = bsa_vir_c1(3);
    CHECK(b3.coefficient({Mode::L(-1), Mode::L(-1), Mode::L(-1)}) == 1);
    CHECK(b3.coefficient({Mode::L(-1), Mode::L(-2)}) == 2);
    CHECK(b3.coefficient({Mode::L(-2), Mode::L(-1)}) == 2);
    CHECK(b3.coefficient({Mode::L(-3)}) == 4);
    CHECK_THROWS_AS(bsa_vir_c1(0), std::invalid_argument);
  }

  TEST_CASE("Virasoro calibration examples") {
    const auto r2 = calibrate_vir(2);
    CHECK(entry(r2, "L->-L").match);
    CHECK(*entry(r2, "L->-L").ratio == 1);
    CHECK_FALSE(entry(r2, "identity").match);

    const auto r3 = calibrate_vir(3);
    CHECK(entry(r3, "L->-L").match);
    CHECK(*entry(r3, "L->-L").ratio == -1);
  }

  TEST_CASE("Virasoro calibration holds for q = 1..8 under L->-L") {
    for (int q = 1; q <= 8; ++q) {
      CAPTURE(q);
      const auto r = calibrate_vir(q);
      CHECK(entry(r, "L->-L").match);
      // The solver vector starts with L(-1)^q at coefficient 1.
      const Rational ratio = *entry(r, "L->-L").ratio;
      CHECK((ratio == 1 || ratio == -1));
    }
  }

  TEST_CASE("N=1 closed form structure") {
    CHECK(bsa_ns(1) == AlgebraElement({Mode::G(-1)}));
    const AlgebraElement b3 = bsa_ns(3);
    CHECK(b3.coefficient({Mode::G(-3)}) == -2);  // (-1)^1 binom(2,1)
    CHECK(b3.coefficient({Mode::G(-1), Mode::G(-1), Mode::G(-1)}) == 6);
    for (int q = 1; q <= 9; q += 2) {
      const AlgebraElement b = bsa_ns(q);
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), q - 1, (q - 1) / 2);
      const Rational single = b.coefficient({Mode::G(-q)});
      CHECK((single == Rational(binom) || single == -Rational(binom)));
      for (const auto& [w, c] : b.terms()) CHECK(parity(w) == 1);
    }
    CHECK_THROWS_AS(bsa_ns(4), std::invalid_argument);
  }

  TEST_CASE("N=1 calibration") {
    const auto r1 = calibrate_ns(1);
    CHECK(entry(r1, "identity").match);
    CHECK(*entry(r1, "identity").ratio == 1);
    // No map in the family reproduces the solver at q = 3; the report says so.
    const auto r3 = calibrate_ns(3);
    CHECK_FALSE(r3.any_match());
    CHECK(r3.maps.size() == convention_maps().size());
    const auto again = calibrate_ns(3);
    for (std::size_t i = 0; i < r3.maps.size(); ++i) CHECK(r3.maps[i].match == again.maps[i].match);
  }

  TEST_CASE("convention maps") {
    const AlgebraElement e = AlgebraElement({Mode::L(-1), Mode::G(-1)}) + AlgebraElement({Mode::G(-3)}, 2);
    for (const auto& m : convention_maps()) {
      const AlgebraElement once = apply_convention(m, e);
      CHECK(apply_convention(m, once) == e);  // every map is an involution
    }
    CHECK(apply_convention(convention_maps().at(1), e).coefficient({Mode::L(-1), Mode::G(-1)}) == -1);
  }

  TEST_CASE("proportionality_ratio") {
    VermaModule m(Flavor::Virasoro, 1, R(1, 4));
    const AlgebraElement s = AlgebraElement({Mode::L(-1), Mode::L(-1)}) - AlgebraElement({Mode::L(-2)});
    CHECK(*proportionality_ratio(m.reduce(s * R(-3, 2)), m.reduce(s)) == R(-3, 2));
    CHECK_FALSE(proportionality_ratio(m.reduce(AlgebraElement({Mode::L(-2)})), m.reduce(s)).has_value());
  }
}
