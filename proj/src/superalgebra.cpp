#include "degfusion/superalgebra.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace degfusion {

std::string to_string(Flavor f) { return f == Flavor::Virasoro ? "vir" : "ns"; }

Flavor parse_flavor(std::string_view text) {
  if (text == "vir") return Flavor::Virasoro;
  if (text == "ns") return Flavor::NS;
  throw std::invalid_argument("unknown algebra: " + std::string(text));
}

Mode Mode::G(int twice_index) {
  if (twice_index % 2 == 0) throw std::invalid_argument("G-mode index must be a strict half-integer");
  return Mode{ModeKind::G, twice_index};
}

std::string Mode::to_string() const {
  std::string out = kind == ModeKind::L ? "L" : "G";
  if (kind == ModeKind::L) return out + std::to_string(twice_index / 2);
  return out + std::to_string(twice_index) + "/2";
}

Mode parse_mode(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'L' && text[0] != 'G'))
    throw std::invalid_argument("malformed mode: " + std::string(text));
  const std::string body(text.substr(1));
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(body, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed mode: " + std::string(text));
  }
  if (text[0] == 'L') {
    if (pos != body.size()) throw std::invalid_argument("malformed mode: " + std::string(text));
    return Mode::L(value);
  }
  if (body.substr(pos) != "/2" || value % 2 == 0)
    throw std::invalid_argument("malformed mode: " + std::string(text));
  return Mode::G(value);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& m : w) {
    const int t = m.twice_index;
    out += m.kind == ModeKind::L ? "L(" + std::to_string(t / 2) + ")" : "G(" + std::to_string(t) + "/2)";
  }
  return out;
}

int parity(const Word& w) {
  int odd = 0;
  for (const auto& m : w) odd += m.is_odd() ? 1 : 0;
  return odd % 2;
}

HalfInt level(const Word& w) {
  int twice = 0;
  for (const auto& m : w) twice -= m.twice_index;
  return HalfInt{twice};
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(const Word& w, const Rational& coeff) { add(w, coeff); }

Rational AlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(const Word& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    if (mag != 1 || w.empty()) os << mag.get_str() << (w.empty() ? "" : "*");
    if (!w.empty()) os << degfusion::to_string(w);
  }
  return os.str();
}

// ---------------------------------------------------------------------------

void check_flavor(Flavor flavor, const Mode& m) {
  if (flavor == Flavor::Virasoro && m.kind == ModeKind::G)
    throw std::invalid_argument("G-mode " + m.to_string() + " is not in the Virasoro algebra");
}

AlgebraElement bracket(Flavor flavor, const Mode& a, const Mode& b, const Rational& central) {
  check_flavor(flavor, a);
  check_flavor(flavor, b);
  AlgebraElement out;
  const int sum = a.twice_index + b.twice_index;
  if (a.kind == ModeKind::L && b.kind == ModeKind::L) {
    // [L_m, L_n] = (m-n) L_{m+n} + C/12 (m^3-m) delta_{m+n,0}
    const long m = a.twice_index / 2;
    const long n = b.twice_index / 2;
    out.add({Mode::L(static_cast<int>(m + n))}, Rational(m - n));
    if (m + n == 0) out.add({}, central * Rational(m * m * m - m) / 12);
    return out;
  }
  if (a.kind == ModeKind::L && b.kind == ModeKind::G) {
    // [L_m, G_s] = (m/2 - s) G_{m+s}
    out.add({Mode::G(sum)}, make_rational(a.twice_index / 2 - b.twice_index, 2));
    return out;
  }
  if (a.kind == ModeKind::G && b.kind == ModeKind::L) {
    out.add({Mode::G(sum)}, -make_rational(b.twice_index / 2 - a.twice_index, 2));
    return out;
  }
  // {G_r, G_s} = 2 L_{r+s} + C/3 (r^2 - 1/4) delta_{r+s,0}
  out.add({Mode::L(sum / 2)}, 2);
  if (sum == 0) {
    const Rational r = make_rational(a.twice_index, 2);
    out.add({}, central / 3 * (r * r - make_rational(1, 4)));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool l_before_g_precedes(const Mode& x, const Mode& w1) {
  const int ax = -x.twice_index;
  const int aw = -w1.twice_index;
  if (x.kind == ModeKind::L) return w1.kind == ModeKind::G || ax >= aw;
  return w1.kind == ModeKind::G && ax > aw;
}

class LBeforeGOrderer {
 public:
  explicit LBeforeGOrderer(Flavor flavor) : flavor_(flavor) {}

  // x * (ordered word w), re-expressed in ordered words.
  const AlgebraElement& insert(const Mode& x, const Word& w) {
    auto key = std::make_pair(x, w);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    AlgebraElement out;
    if (w.empty() || l_before_g_precedes(x, w.front())) {
      Word nw{x};
      nw.insert(nw.end(), w.begin(), w.end());
      out.add(nw, 1);
    } else {
      const Mode& w1 = w.front();
      const Word rest(w.begin() + 1, w.end());
      if (x == w1 && x.is_odd()) {
        // G_r G_r = L_{2r}
        out += insert(Mode::L(x.twice_index), rest);
      } else {
        const Rational sign = (x.is_odd() && w1.is_odd()) ? -1 : 1;
        const AlgebraElement moved = insert(x, rest);
        for (const auto& [word, c] : moved.terms()) out += insert_element(w1, word) * (sign * c);
        // creation modes only: no central term
        const AlgebraElement br = bracket(flavor_, x, w1, 0);
        for (const auto& [bw, bc] : br.terms()) out += insert(bw.front(), rest) * bc;
      }
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

  AlgebraElement insert_element(const Mode& x, const Word& w) { return insert(x, w); }

  AlgebraElement order(const Word& w) {
    AlgebraElement acc(Word{}, 1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      AlgebraElement next;
      for (const auto& [word, c] : acc.terms()) next += insert(*it, word) * c;
      acc = std::move(next);
    }
    return acc;
  }

 private:
  Flavor flavor_;
  std::map<std::pair<Mode, Word>, AlgebraElement> cache_;
};

}  // namespace

AlgebraElement order_l_before_g(Flavor flavor, const AlgebraElement& e) {
  LBeforeGOrderer orderer(flavor);
  AlgebraElement out;
  for (const auto& [w, c] : e.terms()) {
    for (const auto& m : w) {
      check_flavor(flavor, m);
      if (!m.is_creation()) throw std::invalid_argument("normal ordering expects creation modes only");
    }
    out += orderer.order(w) * c;
  }
  return out;
}

}  // namespace degfusion
