#include "degfusion/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace degfusion {

long QSeries::scaled(const Rational& exponent) {
  Rational s = exponent * kExponentScale;
  if (!is_integer(s))
    throw std::invalid_argument("q-series exponent " + degfusion::to_string(exponent) + " is not in (1/8)Z");
  if (!s.get_num().fits_slong_p()) throw std::out_of_range("q-series exponent too large");
  return s.get_num().get_si();
}

long QSeries::scaled_bound() const { return scaled(bound()); }

QSeries::QSeries(const Rational& offset, const Rational& order) : offset_(offset), order_(order) {
  if (order < 0) throw std::invalid_argument("q-series order must be nonnegative");
  scaled(offset);
  scaled(order);
}

QSeries QSeries::monomial(const Rational& exponent, const Integer& coefficient, const Rational& order) {
  QSeries s(exponent, order);
  s.add_term(exponent, coefficient);
  return s;
}

Integer QSeries::coefficient(const Rational& exponent) const {
  auto it = terms_.find(scaled(exponent));
  return it == terms_.end() ? Integer(0) : it->second;
}

void QSeries::add_term(const Rational& exponent, const Integer& coefficient) {
  long e = scaled(exponent);
  if (e > scaled_bound() || coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<Rational, Integer>> QSeries::terms() const {
  std::vector<std::pair<Rational, Integer>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(make_rational(e, kExponentScale), c);
  return out;
}

QSeries QSeries::truncated(const Rational& new_order) const {
  if (new_order > order_) throw std::invalid_argument("cannot extend a truncated q-series");
  QSeries out(offset_, new_order);
  long b = out.scaled_bound();
  for (const auto& [e, c] : terms_)
    if (e <= b) out.terms_.emplace(e, c);
  return out;
}

QSeries QSeries::shifted(const Rational& shift) const {
  QSeries out(offset_ + shift, order_);
  long s = scaled(shift);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + s, c);
  return out;
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  Rational new_offset = std::min(offset_, rhs.offset_);
  Rational new_bound = std::min(bound(), rhs.bound());
  if (new_bound < new_offset) new_bound = new_offset;
  QSeries out(new_offset, new_bound - new_offset);
  for (const auto& [e, c] : terms_) out.add_term(make_rational(e, kExponentScale), c);
  for (const auto& [e, c] : rhs.terms_) out.add_term(make_rational(e, kExponentScale), c);
  *this = std::move(out);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  QSeries neg = rhs;
  neg *= Integer(-1);
  return *this += neg;
}

QSeries& QSeries::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries out(a.offset_ + b.offset_, std::min(a.order_, b.order_));
  const long limit = out.scaled_bound();
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      long e = ea + eb;
      if (e > limit) break;
      Integer prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(e, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.bound() == b.bound() && a.terms_ == b.terms_;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    os << Integer(abs(c)).get_str() << "*q^" << degfusion::to_string(make_rational(e, kExponentScale));
  }
  if (first) os << "0";
  os << " + ... (exact through q^" << degfusion::to_string(bound()) << ")";
  return os.str();
}

QSeries euler_inverse(const Rational& order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  const long n_max = floor(order).get_si();
  // Expand prod 1/(1-q^k) one factor at a time (unbounded coin change).
  std::vector<Integer> coeff(n_max + 1);
  coeff[0] = 1;
  for (long part = 1; part <= n_max; ++part)
    for (long n = part; n <= n_max; ++n) coeff[n] += coeff[n - part];
  QSeries out(0, order);
  for (long n = 0; n <= n_max; ++n) out.add_term(n, coeff[n]);
  return out;
}

QSeries ns_denominator(const Rational& order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  // Half-integer grid: index k stands for q^{k/2}.
  const long k_max = floor(order * 2).get_si();
  std::vector<Integer> fermion(k_max + 1);
  fermion[0] = 1;
  for (long odd = 1; odd <= k_max; odd += 2)  // factor (1 + q^{odd/2}), each used once
    for (long k = k_max; k >= odd; --k) fermion[k] += fermion[k - odd];
  QSeries fermionic(0, order);
  for (long k = 0; k <= k_max; ++k) fermionic.add_term(make_rational(k, 2), fermion[k]);
  return fermionic * euler_inverse(order);
}

}  // namespace degfusion
