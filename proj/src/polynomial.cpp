#include "degfusion/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace degfusion {

// ---------------------------------------------------------------------------
// Polynomial1

Polynomial1::Polynomial1(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial1::Polynomial1(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial1 Polynomial1::x() { return Polynomial1({Rational(0), Rational(1)}); }

Polynomial1 Polynomial1::linear_factor(const Rational& root) {
  return Polynomial1({Rational(-root), Rational(1)});
}

void Polynomial1::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial1::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

const Rational& Polynomial1::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial1::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial1& Polynomial1::operator+=(const Polynomial1& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial1& Polynomial1::operator-=(const Polynomial1& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial1& Polynomial1::operator*=(const Polynomial1& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial1& Polynomial1::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial1 Polynomial1::operator-() const {
  Polynomial1 out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial1 Polynomial1::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial1(std::move(out));
}

Polynomial1 Polynomial1::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

std::string Polynomial1::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Polynomial1, Polynomial1> divmod(const Polynomial1& a, const Polynomial1& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const Rational lead = b.leading();
  std::vector<Rational> quot(a.degree() >= db ? a.degree() - db + 1 : 0);
  for (int i = a.degree(); i >= db; --i) {
    Rational factor = rem[i] / lead;
    quot[i - db] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= factor * b.coefficients()[j];
  }
  rem.resize(std::max(0, std::min<int>(db, static_cast<int>(rem.size()))));
  return {Polynomial1(std::move(quot)), Polynomial1(std::move(rem))};
}

Polynomial1 gcd(Polynomial1 a, Polynomial1 b) {
  while (!b.is_zero()) {
    Polynomial1 r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool proportional(const Polynomial1& a, const Polynomial1& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.monic() == b.monic();
}

// ---------------------------------------------------------------------------
// Rational roots.
//
// Real roots of the square-free part are isolated with a Sturm sequence. A
// rational root p/q of the primitive integer form has q | lc, and two distinct
// rationals with denominators <= lc differ by at least 1/lc^2, so once an
// isolating interval is narrower than that, its simplest rational is the only
// candidate and is checked by exact evaluation.

namespace {

int sign_changes(const std::vector<Polynomial1>& chain, const Rational& at) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sgn(p(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<Polynomial1> sturm_chain(const Polynomial1& p) {
  std::vector<Polynomial1> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial1 r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

// Smallest-denominator rational in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi) {
  Integer fl = floor(lo);
  Rational f(fl);
  if (f == lo) return lo;
  if (f + 1 <= hi) return f + 1;
  Rational inner = simplest_between(1 / (hi - f), 1 / (lo - f));
  return f + 1 / inner;
}

Integer leading_integer_scale(const Polynomial1& p) {
  // Leading coefficient of the primitive integer polynomial proportional to p.
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) {
    if (c == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    if (c == 0) continue;
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  Integer lead = p.leading().get_num() * (den_lcm / p.leading().get_den());
  Integer out = lead / content;
  return abs(out);
}

}  // namespace

std::map<Rational, int> rational_roots(const Polynomial1& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no root set");
  std::map<Rational, int> roots;
  if (p.degree() == 0) return roots;

  Polynomial1 squarefree = divmod(p, gcd(p, p.derivative())).first.monic();
  const Integer lc = leading_integer_scale(squarefree);
  const Rational min_width = Rational(1) / Rational(2 * lc * lc);

  // Cauchy bound on the magnitude of every root.
  Rational bound = 0;
  for (int i = 0; i < squarefree.degree(); ++i) bound = std::max(bound, Rational(abs(squarefree.coefficient(i))));
  bound += 1;

  const auto chain = sturm_chain(squarefree);
  std::vector<Rational> candidates;
  // Roots in (lo, hi] with known count.
  struct Interval {
    Rational lo, hi;
    int count;
  };
  std::vector<Interval> work;
  const Rational lo0 = -bound - 1;
  const Rational hi0 = bound;
  int total = sign_changes(chain, lo0) - sign_changes(chain, hi0);
  if (total > 0) work.push_back({lo0, hi0, total});
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    if (iv.count == 1 && iv.hi - iv.lo < min_width) {
      candidates.push_back(simplest_between(iv.lo, iv.hi));
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    int left = sign_changes(chain, iv.lo) - sign_changes(chain, mid);
    int right = iv.count - left;
    if (left > 0) work.push_back({iv.lo, mid, left});
    if (right > 0) work.push_back({mid, iv.hi, right});
  }

  for (const Rational& c : candidates) {
    if (squarefree(c) != 0) continue;
    int mult = 0;
    Polynomial1 rest = p;
    const Polynomial1 factor = Polynomial1::linear_factor(c);
    for (;;) {
      auto [q, r] = divmod(rest, factor);
      if (!r.is_zero()) break;
      ++mult;
      rest = std::move(q);
    }
    roots[c] = mult;
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Polynomial2

Polynomial2::Polynomial2(const Rational& constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

Polynomial2 Polynomial2::x() {
  Polynomial2 p;
  p.terms_[{1, 0}] = 1;
  return p;
}

Polynomial2 Polynomial2::y() {
  Polynomial2 p;
  p.terms_[{0, 1}] = 1;
  return p;
}

Polynomial2 Polynomial2::affine(const Rational& a, const Rational& b, const Rational& c) {
  Polynomial2 p;
  p.add_term({0, 1}, a);
  p.add_term({1, 0}, b);
  p.add_term({0, 0}, c);
  return p;
}

void Polynomial2::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial2::coefficient(int deg_x, int deg_y) const {
  auto it = terms_.find({deg_x, deg_y});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial2::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

Polynomial2& Polynomial2::operator+=(const Polynomial2& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial2& Polynomial2::operator-=(const Polynomial2& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial2& Polynomial2::operator*=(const Polynomial2& rhs) {
  Polynomial2 out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  *this = std::move(out);
  return *this;
}

Polynomial2& Polynomial2::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

std::string Polynomial2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool monomial = e.first > 0 || e.second > 0;
    if (!monomial || mag != 1) {
      os << mag.get_str();
      if (monomial) os << "*";
    }
    if (e.first > 0) os << "x" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.first > 0 && e.second > 0) os << "*";
    if (e.second > 0) os << "y" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
  }
  return os.str();
}

Polynomial1 specialize_y(const Polynomial2& p, const Rational& value) {
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<int>(coeffs.size()) <= e.first) coeffs.resize(e.first + 1);
    Rational power = 1;
    for (int i = 0; i < e.second; ++i) power *= value;
    coeffs[e.first] += c * power;
  }
  return Polynomial1(std::move(coeffs));
}

}  // namespace degfusion
