#include <doctest.h>

#include <cmath>

#include "degfusion/rep_rings.hpp"

using namespace degfusion;

namespace {

RepLabel osp(int twice) { return RepLabel::osp(HalfInt{twice}); }
RepLabel sl2(int j) { return RepLabel::sl2(j); }

RepMultiset set_of(std::initializer_list<RepLabel> labels) {
  RepMultiset m;
  for (const auto& l : labels) m[l] += 1;
  return m;
}

double residual(const MatrixRealization& m, const std::string& relation) {
  for (const auto& r : relation_residuals(m))
    if (r.relation == relation) return r.residual;
  throw std::out_of_range(relation);
}

}  // namespace

TEST_SUITE("rep-rings") {
  TEST_CASE("sl2 tensor products") {
    CHECK(sl2_tensor(sl2(1), sl2(1)) == set_of({sl2(0), sl2(2)}));
    for (int m = 0; m <= 6; ++m) CHECK(sl2_tensor(sl2(m), sl2(0)) == set_of({sl2(m)}));
    CHECK(sl2_tensor(sl2(2), sl2(1)) == set_of({sl2(1), sl2(3)}));
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b) CHECK(dimension(sl2_tensor(sl2(a), sl2(b))) == (a + 1) * (b + 1));
    CHECK_THROWS_AS(sl2_tensor(sl2(1), osp(1)), std::invalid_argument);
  }

  TEST_CASE("osp tensor products") {
    CHECK(osp_tensor(osp(1), osp(1)) == set_of({osp(0), osp(1), osp(2)}));
    CHECK(dimension(osp_tensor(osp(1), osp(1))) == 9);
    for (int j = 0; j <= 6; ++j) CHECK(osp_tensor(osp(j), osp(0)) == set_of({osp(j)}));
    for (int i = 0; i <= 6; ++i)
      for (int j = 0; j <= 6; ++j) {
        CHECK(dimension(osp_tensor(osp(i), osp(j))) == osp(i).dimension() * osp(j).dimension());
        CHECK(osp_tensor(osp(i), osp(j)) == weight_decompose(tensor_weights(osp(i), osp(j)), RepAlgebra::OSP));
      }
    CHECK_THROWS_AS(osp_tensor(osp(1), sl2(1)), std::invalid_argument);
  }

  TEST_CASE("weight peeling") {
    std::vector<HalfInt> w;
    for (int v : {2, 0, 0, -2}) w.push_back(HalfInt::from_int(v));
    CHECK(weight_decompose(w, RepAlgebra::SL2) == set_of({sl2(0), sl2(2)}));
    CHECK(weight_decompose(tensor_weights(osp(1), osp(1)), RepAlgebra::OSP) == set_of({osp(0), osp(1), osp(2)}));
    CHECK(weight_decompose({}, RepAlgebra::SL2).empty());
    CHECK_THROWS_AS(weight_decompose({HalfInt::from_int(2)}, RepAlgebra::SL2), std::invalid_argument);
    CHECK_THROWS_AS(weight_decompose({HalfInt::from_int(-1)}, RepAlgebra::OSP), std::invalid_argument);
  }

  TEST_CASE("matrix realizations") {
    const auto m = matrices(osp(2));  // j = 1
    std::vector<double> spectrum;
    for (std::size_t i = 0; i < m.generators.at("h").n; ++i) spectrum.push_back(m.generators.at("h")(i, i));
    CHECK(spectrum == std::vector<double>{2, 1, 0, -1, -2});

    for (int j = 0; j <= 8; ++j) {
      const auto s = matrices(sl2(j));
      CHECK(max_consistent_residual(s) < 1e-10);
      const auto& x = s.generators.at("x");
      for (std::size_t r = 0; r < x.n; ++r) CHECK(x(r, 0) == 0);  // highest vector killed
    }
    for (int t = 0; t <= 6; ++t) CHECK(max_consistent_residual(matrices(osp(t))) < 1e-10);

    // The displayed {chi,phi}=2h does not hold for these matrices; {chi,phi}=h does.
    const auto half = matrices(osp(1));
    CHECK(residual(half, "{chi,phi}=h") < 1e-12);
    CHECK(residual(half, "{chi,phi}=2h") > 0.5);
    CHECK(residual(half, "[h,x]=2x") < 1e-12);
    CHECK(residual(half, "{chi,chi}=2x") < 1e-12);
  }

  TEST_CASE("Clebsch-Gordan coefficients") {
    CHECK(sl2_cg(1, 1, 2, 1, 1) == doctest::Approx(1.0));
    CHECK(std::abs(sl2_cg(1, 1, 0, 1, -1)) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(sl2_cg(1, 1, 4, 1, 1) == 0.0);
    CHECK(sl2_cg(2, 2, 0, 2, -2) > 0);  // top convention: positive on the largest m1
    CHECK_THROWS_AS(sl2_cg(1, 1, 2, 2, 0), std::invalid_argument);
    for (int j1 = 0; j1 <= 4; ++j1)
      for (int j2 = 0; j2 <= 4; ++j2)
        for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 2)
          for (int m3 = -j3; m3 <= j3; m3 += 2) {
            double sum = 0;
            for (int m1 = -j1; m1 <= j1; m1 += 2) {
              const int m2 = m3 - m1;
              if (std::abs(m2) <= j2 && (j2 - m2) % 2 == 0) sum += std::pow(sl2_cg(j1, j2, j3, m1, m2), 2);
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
          }
  }

  TEST_CASE("isomorphism with the fusion rings") {
    const FusionTable vir = fusion_ring(Flavor::Virasoro, 6);
    CHECK(iso_check(vir));
    const FusionTable ns = fusion_ring(Flavor::NS, 9);
    CHECK(iso_check(ns));
    CHECK(rep_label_of(Flavor::NS, 5) == osp(2));

    FusionTable flipped = vir;
    flipped.products[{2, 2}].pop_back();
    CHECK_FALSE(iso_check(flipped));
    CHECK(iso_counterexample(flipped)->find("2 x 2") != std::string::npos);

    FusionTable missing = ns;
    missing.products.erase({3, 5});
    CHECK_THROWS_AS(iso_check(missing), std::invalid_argument);
  }
}
