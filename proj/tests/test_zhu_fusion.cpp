#include <doctest.h>

#include <set>

#include "degfusion/fusion.hpp"
#include "degfusion/zhu.hpp"

using namespace degfusion;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

const Polynomial2 X = Polynomial2::x(), Y = Polynomial2::y();
const Polynomial1 x = Polynomial1::x();

Polynomial1 roots_product(std::initializer_list<Rational> roots) {
  Polynomial1 p(R(1));
  for (const auto& r : roots) p *= Polynomial1::linear_factor(r);
  return p;
}

std::set<int> labels(const std::vector<Channel>& chs, ChannelParity p) {
  std::set<int> out;
  for (const auto& c : chs)
    if (c.parity == p) out.insert(c.label);
  return out;
}

}  // namespace

TEST_SUITE("zhu-fusion") {
  TEST_CASE("Virasoro projection examples") {
    CHECK(zhu_project_vir(AlgebraElement({Mode::L(-2)}), R(1, 4)) == R(2) * Y - X + R(1, 4));
    CHECK(zhu_project_vir(AlgebraElement({Mode::L(-1), Mode::L(-1)}), R(1, 4)) ==
          (Y - X + R(5, 4)) * (Y - X + R(1, 4)));
    CHECK(zhu_project_vir(AlgebraElement(Word{}), R(1, 4)) == Polynomial2(R(1)));
    CHECK_THROWS_AS(zhu_project_vir(AlgebraElement({Mode::L(1)}), 0), std::invalid_argument);
    CHECK_THROWS_AS(zhu_project_vir(AlgebraElement({Mode::G(-1)}), 0), std::invalid_argument);
  }

  TEST_CASE("Virasoro fusion polynomial examples") {
    CHECK(fusion_poly_vir(1, 1) == x * x - x);
    CHECK(proportional(fusion_poly_vir(1, 2), roots_product({R(9, 4), R(1, 4)})));
    CHECK(proportional(fusion_poly_vir(2, 1), roots_product({R(9, 4), R(1, 4), R(1, 4)})));
  }

  TEST_CASE("root multiset law, m,n <= 6") {
    for (int m = 1; m <= 6; ++m)
      for (int n = 1; n <= 6; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        std::map<Rational, int> want;
        for (int i = n - m; i <= n + m; i += 2) want[R(i * i, 4)] += 1;
        const Polynomial1 p = fusion_poly_vir(m, n);
        CHECK(p.degree() == m + 1);
        CHECK(rational_roots(p) == want);
        // A repeated root appears exactly when m > n.
        bool repeated = false;
        for (const auto& [r, k] : rational_roots(p)) repeated |= k > 1;
        CHECK(repeated == (m > n));
      }
  }

  TEST_CASE("density-module oracle") {
    CHECK(density_multiplier(1, 0, R(5), R(7)) == 5);  // L(-1) on w_0: mu
    CHECK(density_multiplier(2, 3, R(5), R(7)) == 5 + 3 - 7);
    for (int m = 1; m <= 6; ++m)
      for (int n = 1; n <= 6; ++n) {
        const AlgebraElement s = element_of(degenerate_singular_vector(Flavor::Virasoro, m));
        CHECK(proportional(density_project_vir(s, m, n), fusion_poly_vir(m, n)));
      }
  }

  TEST_CASE("NS projection examples") {
    const ZhuImage g = zhu_project_ns(AlgebraElement({Mode::G(-3)}), R(2, 7));
    CHECK(g.odd == Polynomial2(R(1)));
    CHECK(g.even.is_zero());

    const ZhuImage lg = zhu_project_ns(AlgebraElement({Mode::G(-1), Mode::L(-1)}), R(1, 2));
    CHECK(lg.odd == Y - X + R(1));
    CHECK(lg.even.is_zero());

    const ZhuImage gg = zhu_project_ns(AlgebraElement({Mode::G(-1), Mode::G(-3)}), R(1, 2));
    CHECK(gg.even == R(3) * Y - X + R(1, 2));
    CHECK(gg.odd.is_zero());
    CHECK_THROWS_AS(zhu_project_ns(AlgebraElement({Mode::G(1)}), 0), std::invalid_argument);
  }

  TEST_CASE("NS fusion polynomial examples") {
    const auto p33 = fusion_polys_ns(3, 3);
    CHECK(proportional(p33.q1, roots_product({R(1, 2)})));
    CHECK(proportional(p33.q2, roots_product({R(0), R(2)})));
    const auto p15 = fusion_polys_ns(1, 5);
    CHECK(p15.q1 == Polynomial1(R(1)));
    CHECK(proportional(p15.q2, roots_product({R(2)})));
    const auto p31 = fusion_polys_ns(3, 1);
    CHECK(proportional(p31.q1, x));
    CHECK(proportional(p31.q2, roots_product({R(1, 2), R(1, 2)})));
    CHECK_THROWS_AS(fusion_polys_ns(2, 3), std::invalid_argument);
  }

  TEST_CASE("NS degree law and parity partition, q,r <= 9") {
    for (int q = 1; q <= 9; q += 2)
      for (int r = 1; r <= 9; r += 2) {
        CAPTURE(q);
        CAPTURE(r);
        const auto p = fusion_polys_ns(q, r);
        CHECK(p.q1.degree() + p.q2.degree() == q);
        if (q < r) continue;
        const auto chs = fusion_channels(Flavor::NS, q, r);
        std::set<int> even, odd;
        for (int s = q + r - 1; s >= q - r + 1; s -= 4) even.insert(s);
        for (int s = q + r - 3; s >= q - r + 3; s -= 4) odd.insert(s);
        CHECK(labels(chs, ChannelParity::Even) == even);
        CHECK(labels(chs, ChannelParity::Odd) == odd);
      }
  }

  TEST_CASE("fusion coefficients") {
    CHECK(fusion_coeff_vir(1, 1, 0) == 1);
    CHECK(fusion_coeff_vir(1, 1, 2) == 1);
    CHECK(fusion_coeff_vir(1, 1, 1) == 0);
    CHECK(fusion_coeff_vir(2, 1, 1) == 1);
    CHECK(fusion_coeff_ns(3, 3, 5) == NSCoefficient{1, ChannelParity::Even});
    CHECK(fusion_coeff_ns(3, 3, 3) == NSCoefficient{1, ChannelParity::Odd});
    CHECK(fusion_coeff_ns(3, 3, 7) == NSCoefficient{0, ChannelParity::None});
    // (3,1): x = 0 is a root of Q1 one way only and is discarded.
    CHECK(fusion_coeff_ns(3, 1, 1).coeff == 0);
    CHECK_THROWS_AS(fusion_coeff_ns(3, 3, 4), std::invalid_argument);
    for (int m = 0; m <= 5; ++m)
      for (int n = 0; n <= 5; ++n)
        for (int r = 0; r <= 10; ++r) CHECK(fusion_coeff_vir(m, n, r) == fusion_coeff_vir(n, m, r));
    for (int q = 1; q <= 7; q += 2)
      for (int r = 1; r <= 7; r += 2)
        for (int s = 1; s <= 13; s += 2) CHECK(fusion_coeff_ns(q, r, s) == fusion_coeff_ns(r, q, s));
  }

  TEST_CASE("fusion rings") {
    const FusionTable vir = fusion_ring(Flavor::Virasoro, 6);
    CHECK(vir.product(1, 1) == std::vector<Channel>{{0, ChannelParity::None}, {2, ChannelParity::None}});
    for (int m = 0; m <= 6; ++m) CHECK(vir.product(0, m) == std::vector<Channel>{{m, ChannelParity::None}});
    const RingReport rv = ring_report(vir);
    CHECK(rv.passed());
    CHECK(rv.triples_checked > 0);

    const FusionTable ns = fusion_ring(Flavor::NS, 9);
    CHECK(ns.product(3, 3) == std::vector<Channel>{{1, ChannelParity::Even}, {3, ChannelParity::Odd}, {5, ChannelParity::Even}});
    CHECK(ring_report(ns).passed());
    CHECK(ns.constant(3, 3, 5) == 1);
    CHECK(ns.constant(3, 3, 7) == 0);
    CHECK_THROWS_AS(ns.product(2, 3), std::out_of_range);
  }

  TEST_CASE("ring_report negative controls") {
    FusionTable t = fusion_ring(Flavor::Virasoro, 4);
    t.products[{1, 2}].push_back({5, ChannelParity::None});
    const RingReport r = ring_report(t);
    CHECK_FALSE(r.commutative);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.witnesses.empty());

    FusionTable u = fusion_ring(Flavor::Virasoro, 4);
    u.products[{1, 1}] = {{2, ChannelParity::None}};  // drop the a(0) channel
    const RingReport ru = ring_report(u);
    CHECK_FALSE(ru.associative);
    bool names_triple = false;
    for (const auto& w : ru.witnesses) names_triple |= w.find(" x ") != std::string::npos;
    CHECK(names_triple);
  }

  TEST_CASE("table construction is deterministic") {
    CHECK(fusion_ring(Flavor::NS, 7).products == fusion_ring(Flavor::NS, 7).products);
  }
}
