#include "degfusion/characters.hpp"

#include <stdexcept>

#include "degfusion/verma.hpp"

namespace degfusion {

std::string to_string(SectorLabel s) { return s == SectorLabel::VL ? "V_L" : "V_L_half"; }

SectorLabel parse_sector(std::string_view text) {
  if (text == "V_L") return SectorLabel::VL;
  if (text == "V_L_half") return SectorLabel::VLHalf;
  throw std::invalid_argument("unknown lattice sector: " + std::string(text));
}

namespace {

void check_order(const Rational& order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
}

// (q^h_low - q^h_high) * denominator, exact to depth order above q^h_low.
QSeries difference_character(const Rational& h_low, const Rational& h_high, const QSeries& denominator) {
  QSeries out = denominator.shifted(h_low);
  const Rational depth = h_low + denominator.order() - h_high;
  if (depth >= 0) out -= denominator.truncated(depth).shifted(h_high);
  return out;
}

}  // namespace

QSeries ch_verma(Flavor flavor, const Rational& h, const Rational& order) {
  check_order(order);
  return (flavor == Flavor::Virasoro ? euler_inverse(order) : ns_denominator(order)).shifted(h);
}

QSeries ch_irr_c1(int m, const Rational& order) {
  check_order(order);
  check_label(Flavor::Virasoro, m);
  return difference_character(degenerate_weight(Flavor::Virasoro, m), degenerate_weight(Flavor::Virasoro, m + 2),
                              euler_inverse(order));
}

QSeries ch_irr_ns(int q_label, const Rational& order) {
  check_order(order);
  check_label(Flavor::NS, q_label);
  return difference_character(degenerate_weight(Flavor::NS, q_label), degenerate_weight(Flavor::NS, q_label + 2),
                              ns_denominator(order));
}

QSeries ch_lattice(SectorLabel sector, const Rational& order) {
  check_order(order);
  // Norms m^2 or (m + 1/2)^2, m in Z.
  QSeries theta(0, order);
  const Rational shift = sector == SectorLabel::VL ? Rational(0) : Rational(1, 2);
  const long reach = floor(order).get_si() + 1;
  for (long m = -reach; m <= reach; ++m) {
    const Rational a = m + shift;
    if (a * a <= order) theta.add_term(a * a, 1);
  }
  return theta * euler_inverse(order);
}

bool identity_check(SectorLabel sector, const Rational& order) {
  check_order(order);
  const QSeries lhs = ch_lattice(sector, order);
  QSeries rhs(0, order);
  for (long n = 0;; ++n) {
    // V_L: label m = 2n (weight n^2); V_{L+1/2}: label m = 2n+1.
    const int m = static_cast<int>(sector == SectorLabel::VL ? 2 * n : 2 * n + 1);
    if (degenerate_weight(Flavor::Virasoro, m) > order) break;
    const long mult = sector == SectorLabel::VL ? 2 * n + 1 : 2 * n + 2;
    const Rational h = degenerate_weight(Flavor::Virasoro, m);
    rhs += ch_irr_c1(m, order - h) * Integer(mult);
  }
  return lhs == rhs;
}

}  // namespace degfusion
