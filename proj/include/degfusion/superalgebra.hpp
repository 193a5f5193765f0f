#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "degfusion/rational.hpp"

namespace degfusion {

enum class Flavor { Virasoro, NS };

std::string to_string(Flavor f);  // "vir" / "ns"
Flavor parse_flavor(std::string_view text);

enum class ModeKind { L, G };

/// A generator L(n) or G(r). The index is kept doubled so G(-3/2) has
/// twice_index == -3. L-indices are even when doubled, G-indices odd.
struct Mode {
  ModeKind kind = ModeKind::L;
  int twice_index = 0;

  static Mode L(int n) { return Mode{ModeKind::L, 2 * n}; }
  /// G with index twice_index / 2; twice_index must be odd.
  static Mode G(int twice_index);

  bool is_odd() const { return kind == ModeKind::G; }
  HalfInt index() const { return HalfInt{twice_index}; }
  /// Grade raised by the mode when acting on a Verma module (-index).
  HalfInt level() const { return HalfInt{-twice_index}; }
  bool is_creation() const { return twice_index < 0; }

  std::string to_string() const;  // "L-2", "G-3/2"

  /// Orders by |index|, then sign, then kind; used for every deterministic
  /// ordering of words.
  friend auto operator<=>(const Mode& a, const Mode& b) {
    auto key = [](const Mode& m) {
      return std::tuple(m.twice_index < 0 ? -m.twice_index : m.twice_index, m.twice_index < 0 ? 0 : 1,
                        static_cast<int>(m.kind));
    };
    return key(a) <=> key(b);
  }
  friend bool operator==(const Mode&, const Mode&) = default;
};

Mode parse_mode(std::string_view text);

/// Formal left-to-right product of modes. Ordered lexicographically by modes.
using Word = std::vector<Mode>;

std::string to_string(const Word& w);
/// G-mode count mod 2.
int parity(const Word& w);
/// Sum of levels of all modes.
HalfInt level(const Word& w);

/// Finite rational combination of words; no stored zero coefficients.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(const Word& w, const Rational& coeff = 1);

  static AlgebraElement scalar(const Rational& s) { return AlgebraElement(Word{}, s); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Rational>& terms() const { return terms_; }
  Rational coefficient(const Word& w) const;
  void add(const Word& w, const Rational& coeff);

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const Rational& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  /// Concatenation product.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  std::string to_string() const;

 private:
  std::map<Word, Rational> terms_;
};

/// Super bracket [a, b] (anticommutator when both are odd) at the given
/// value of the central element: one mode plus a multiple of the empty word.
/// Throws std::invalid_argument if a G-mode appears under the Virasoro flavor.
AlgebraElement bracket(Flavor flavor, const Mode& a, const Mode& b, const Rational& central);

void check_flavor(Flavor flavor, const Mode& m);

/// Normal-orders an element of the negative subalgebra (all modes creation
/// modes) so that each word is L(-n1)...L(-nb)G(-r1)...G(-ra) with
/// n1 >= ... >= nb and r1 > ... > ra. Brackets among creation modes have no
/// central term, so the result is exact in U(n-).
AlgebraElement order_l_before_g(Flavor flavor, const AlgebraElement& e);

}  // namespace degfusion
