#pragma once

#include <utility>

#include "degfusion/polynomial.hpp"
#include "degfusion/superalgebra.hpp"
#include "degfusion/verma.hpp"

namespace degfusion {

/// Image of a vector of M(c, h1) in the Zhu bimodule
/// C[x,y] + C[x,y]v, v = [G(-1/2) v_h1]. Virasoro images have odd == 0.
struct ZhuImage {
  Flavor flavor = Flavor::Virasoro;
  Polynomial2 even;
  Polynomial2 odd;
  friend bool operator==(const ZhuImage&, const ZhuImage&) = default;
};

/// Projects words of negative L-modes: L(-j) contributes (j*y - x + w),
/// w = h1 + level of the modes to its right.
Polynomial2 zhu_project_vir(const AlgebraElement& e, const Rational& h1);

/// Projects words of negative L- and G-modes after moving L-modes left of
/// G-modes. G-modes pair from the left, G(-a)G(-m-1/2) giving
/// ((2m+1)*y - x + w); an unpaired G is the odd class v.
ZhuImage zhu_project_ns(const AlgebraElement& e, const Rational& h1);

AlgebraElement element_of(const VermaVector& v);

/// The unique solver singular vector at the degenerate weight of a label
/// (memoized; throws std::logic_error if the kernel is not one-dimensional).
VermaVector degenerate_singular_vector(Flavor flavor, int label);

/// Zhu image of the solver singular vector of M(1, m^2/4) at y = n^2/4.
/// Degree m+1; defined up to the solver's normalization.
Polynomial1 fusion_poly_vir(int m, int n);

/// Multiplier of L(-j) on w_r in the density module F(lambda, mu):
/// L_k.w_r = (mu + r + lambda (k+1)) w_{r-k} with k = -j.
Rational density_multiplier(int j, int r, const Rational& mu, const Rational& lambda);

/// Independent route: acts with e on w_0 of the density module with
/// lambda = -n^2/4, mu = n^2/4 + m^2/4 - x and returns the coefficient.
Polynomial1 density_project_vir(const AlgebraElement& e, int m, int n);

struct NSFusionPolys {
  Polynomial1 q1;  // odd component of [s]
  Polynomial1 q2;  // even component of [G(-1/2) s]
};

/// Q1, Q2 for the singular vector s of M(3/2, h_{1,q}) at y = h_{1,r}.
NSFusionPolys fusion_polys_ns(int q, int r);

}  // namespace degfusion
