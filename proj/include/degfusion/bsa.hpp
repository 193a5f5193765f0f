#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degfusion/superalgebra.hpp"
#include "degfusion/verma.hpp"

namespace degfusion {

/// Closed-form singular vector candidate at c = 1, label q: sum over ordered
/// compositions (i_1..i_n) of q of prod_{1<=k<q, k not a partial sum} k(q-k)
/// times L(-i_1)...L(-i_n).
AlgebraElement bsa_vir_c1(int q);

/// Closed-form N=1 candidate for odd q: sum over partitions of q into odd
/// parts and over all orderings of those parts.
AlgebraElement bsa_ns(int q);

/// A named re-signing of words (publication sign conventions).
struct ConventionMap {
  std::string name;
  /// Scalar applied to a word given its L-count and G-count.
  Rational (*sign)(int l_count, int g_count);
};

const std::vector<ConventionMap>& convention_maps();
AlgebraElement apply_convention(const ConventionMap& map, const AlgebraElement& e);

struct CalibrationEntry {
  std::string name;
  bool match = false;
  std::optional<Rational> ratio;  // candidate = ratio * solver vector
};

struct CalibrationReport {
  Flavor flavor = Flavor::Virasoro;
  int q = 0;
  std::vector<CalibrationEntry> maps;

  bool any_match() const;
};

/// Reduces every convention image of the candidate inside M(c, h) and tests
/// proportionality against the solver's singular vector at level n.
CalibrationReport calibrate(const AlgebraElement& candidate, Flavor flavor, const Rational& c, const Rational& h,
                            HalfInt n, int q);

/// Ratio a / b when a is a nonzero multiple of b.
std::optional<Rational> proportionality_ratio(const VermaVector& a, const VermaVector& b);

}  // namespace degfusion
