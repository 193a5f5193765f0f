#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "degfusion/linalg.hpp"
#include "degfusion/rational.hpp"
#include "degfusion/superalgebra.hpp"

namespace degfusion {

/// Homogeneous element of M(c, h), expanded in canonical words
/// G(-r1)...G(-ra) L(-n1)...L(-nb) with r1 > ... > ra and n1 >= ... >= nb.
struct VermaVector {
  Flavor flavor = Flavor::Virasoro;
  Rational c;
  Rational h;
  HalfInt level;
  std::map<Word, Rational> entries;  // no zero coefficients

  bool is_zero() const { return entries.empty(); }
  Rational coefficient(const Word& w) const;
  std::string to_string() const;
  friend bool operator==(const VermaVector&, const VermaVector&) = default;
};

bool is_canonical(const Word& w);

/// All canonical words of level n in increasing word order.
std::vector<Word> level_basis(Flavor flavor, HalfInt n);

/// Verma module M(c, h) with a memoized action of single modes on canonical
/// words. The cache is guarded, so one instance may be shared across threads.
class VermaModule {
 public:
  VermaModule(Flavor flavor, Rational c, Rational h);

  Flavor flavor() const { return flavor_; }
  const Rational& c() const { return c_; }
  const Rational& h() const { return h_; }

  VermaVector highest_weight_vector() const;
  VermaVector vector_from_word(const Word& canonical) const;

  VermaVector act(const Mode& m, const VermaVector& v) const;
  /// Each word acts right-to-left on v; linear in both arguments.
  VermaVector act(const AlgebraElement& e, const VermaVector& v) const;
  /// e applied to the highest-weight vector.
  VermaVector reduce(const AlgebraElement& e) const;

 private:
  using Terms = std::map<Word, Rational>;
  Terms act_on_word(const Mode& m, const Word& w) const;
  Terms act_on_terms(const Mode& m, const Terms& t) const;

  Flavor flavor_;
  Rational c_;
  Rational h_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Mode, Word>, Terms> cache_;
};

VermaVector apply_mode(const Mode& m, const VermaVector& v);
VermaVector apply_element(const AlgebraElement& e, const VermaVector& v);

/// Generators of the positive subalgebra used for the annihilation test.
std::vector<Mode> annihilation_generators(Flavor flavor);

/// Exact basis of level-n vectors killed by the generating set, each scaled
/// so its first nonzero coefficient (in word order) is 1.
std::vector<VermaVector> singular_vectors(Flavor flavor, const Rational& c, const Rational& h, HalfInt n);

struct GramMatrix {
  HalfInt level;
  std::vector<Word> basis;
  RationalMatrix entries;
};

/// Shapovalov form on the level-n subspace, normalized by <v, v> = 1.
GramMatrix gram_matrix(Flavor flavor, const Rational& c, const Rational& h, HalfInt n);

struct KacPoint {
  int p = 1;
  int q = 1;
  Rational t;
  Rational c_of_t;
  Rational h_of_t;
};

/// Evaluates the Kac curves c(t), h_{p,q}(t).
KacPoint kac_data(Flavor flavor, int p, int q, const Rational& t);

/// Degenerate weights used by every fusion statement: m^2/4 at c = 1 and
/// (q-1)^2/8 at c = 3/2 (q odd).
Rational central_charge(Flavor flavor);
Rational degenerate_weight(Flavor flavor, int label);
/// Level of the generating singular vector: m+1 (Virasoro), q/2 (NS).
HalfInt singular_level(Flavor flavor, int label);
void check_label(Flavor flavor, int label);

}  // namespace degfusion
