#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degfusion/fusion.hpp"
#include "degfusion/rational.hpp"

namespace degfusion {

enum class RepAlgebra { SL2, OSP };

std::string to_string(RepAlgebra a);
RepAlgebra parse_rep_algebra(std::string_view text);

/// sl2: doubled label j (an integer), dimension j+1.
/// osp(1|2): j in (1/2)N, dimension 4j+1.
struct RepLabel {
  RepAlgebra algebra = RepAlgebra::SL2;
  HalfInt j;

  static RepLabel sl2(int doubled);
  static RepLabel osp(HalfInt j);
  long dimension() const;
  std::string to_string() const;
  friend auto operator<=>(const RepLabel&, const RepLabel&) = default;
};

using RepMultiset = std::map<RepLabel, long>;

long dimension(const RepMultiset& m);

RepMultiset sl2_tensor(const RepLabel& a, const RepLabel& b);
RepMultiset osp_tensor(const RepLabel& a, const RepLabel& b);

/// h-eigenvalues of V(j): j, j-2, .., -j (sl2) or 2j, 2j-1, .., -2j (osp).
std::vector<HalfInt> weights(const RepLabel& label);
/// Weights of a (x) b, all pairwise sums.
std::vector<HalfInt> tensor_weights(const RepLabel& a, const RepLabel& b);

/// Peels highest weights off the multiset. Throws std::invalid_argument if
/// the multiset is not the character of a module.
RepMultiset weight_decompose(const std::vector<HalfInt>& weights, RepAlgebra algebra);

/// Row-major dense square matrix.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  explicit DenseMatrix(std::size_t size = 0) : n(size), data(size * size, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) { return data[r * n + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * n + c]; }
};

/// Generators on the basis u_j(j), u_j(j-2), .. (sl2) or v_j, v_{j-1/2}, ..
/// (osp). Keys: x, y, h and, for osp, phi, chi.
struct MatrixRealization {
  RepLabel label;
  std::map<std::string, DenseMatrix> generators;
};

MatrixRealization matrices(const RepLabel& label);

struct RelationResidual {
  std::string relation;
  double residual = 0;  // max |entry| of lhs - rhs
  bool printed = false;  // the relation as displayed for osp(1|2)
  bool consistent = true;  // member of the self-consistent relation set
};

/// sl2: [h,x]=2x, [h,y]=-2y, [x,y]=h. osp: the self-consistent set the
/// formulas realize, plus the displayed set for comparison.
std::vector<RelationResidual> relation_residuals(const MatrixRealization& m);
/// Max residual over the consistent relations.
double max_consistent_residual(const MatrixRealization& m);

/// <j1 m1; j2 m2 | j3 m1+m2> in doubled labels. The highest vector of V(j3)
/// is positive on its largest m1; lower components come from y.
double sl2_cg(int j1, int j2, int j3, int m1, int m2);

/// First disagreement between the table and the tensor rule under
/// a(m) -> V(m) (sl2) or b(m) -> V((m-1)/4) (osp), if any.
std::optional<std::string> iso_counterexample(const FusionTable& t);
bool iso_check(const FusionTable& t);

RepLabel rep_label_of(Flavor flavor, int label);

}  // namespace degfusion
