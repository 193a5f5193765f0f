#include "degfusion/verma.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace degfusion {

Rational VermaVector::coefficient(const Word& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? Rational(0) : it->second;
}

std::string VermaVector::to_string() const {
  AlgebraElement e;
  for (const auto& [w, c] : entries) e.add(w, c);
  return "(" + e.to_string() + ")v";
}

namespace {

// Can x stand directly in front of w1 in a canonical word?
bool precedes(const Mode& x, const Mode& w1) {
  const int ax = -x.twice_index;
  const int aw = -w1.twice_index;
  if (x.kind == ModeKind::G) return w1.kind == ModeKind::L || ax > aw;
  return w1.kind == ModeKind::L && ax >= aw;
}

void add_to(std::map<Word, Rational>& t, const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

}  // namespace

bool is_canonical(const Word& w) {
  for (const auto& m : w)
    if (!m.is_creation()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!precedes(w[i], w[i + 1])) return false;
  return true;
}

std::vector<Word> level_basis(Flavor flavor, HalfInt n) {
  if (n.twice < 0) throw std::invalid_argument("level must be nonnegative");
  if (flavor == Flavor::Virasoro && !n.is_integer())
    throw std::invalid_argument("Virasoro levels are integers");
  std::vector<Word> out;
  // L-part: partitions (twice-units, even parts) with non-increasing parts.
  std::function<void(int, int, Word&)> l_parts = [&](int remaining, int max_part, Word& w) {
    if (remaining == 0) {
      out.push_back(w);
      return;
    }
    for (int part = std::min(max_part, remaining); part >= 2; part -= 2) {
      w.push_back(Mode::L(-part / 2));
      l_parts(remaining - part, part, w);
      w.pop_back();
    }
  };
  // G-part: strictly decreasing odd parts (twice-units).
  std::function<void(int, int, Word&)> g_parts = [&](int remaining, int max_part, Word& w) {
    if (remaining % 2 == 0) l_parts(remaining, remaining, w);
    for (int part = max_part; part >= 1; part -= 2) {
      if (part > remaining) continue;
      w.push_back(Mode::G(-part));
      g_parts(remaining - part, part - 2, w);
      w.pop_back();
    }
  };
  Word w;
  if (flavor == Flavor::Virasoro) {
    l_parts(n.twice, n.twice, w);
  } else {
    int max_odd = n.twice % 2 == 1 ? n.twice : n.twice - 1;
    g_parts(n.twice, max_odd, w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

VermaModule::VermaModule(Flavor flavor, Rational c, Rational h)
    : flavor_(flavor), c_(std::move(c)), h_(std::move(h)) {}

VermaVector VermaModule::highest_weight_vector() const { return vector_from_word({}); }

VermaVector VermaModule::vector_from_word(const Word& canonical) const {
  if (!is_canonical(canonical)) throw std::invalid_argument("word is not canonical: " + to_string(canonical));
  for (const auto& m : canonical) check_flavor(flavor_, m);
  VermaVector v{flavor_, c_, h_, level(canonical), {}};
  v.entries.emplace(canonical, 1);
  return v;
}

VermaModule::Terms VermaModule::act_on_terms(const Mode& m, const Terms& t) const {
  Terms out;
  for (const auto& [w, c] : t)
    for (const auto& [w2, c2] : act_on_word(m, w)) add_to(out, w2, c * c2);
  return out;
}

VermaModule::Terms VermaModule::act_on_word(const Mode& x, const Word& w) const {
  const auto key = std::make_pair(x, w);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Terms out;
  if (x.twice_index == 0) {
    // L(0) acts diagonally.
    add_to(out, w, h_ + level(w).value());
  } else if (w.empty()) {
    if (x.is_creation()) out.emplace(Word{x}, 1);
  } else if (x.is_creation() && precedes(x, w.front())) {
    Word nw{x};
    nw.insert(nw.end(), w.begin(), w.end());
    out.emplace(std::move(nw), 1);
  } else {
    const Mode& w1 = w.front();
    const Word rest(w.begin() + 1, w.end());
    if (x == w1 && x.is_odd()) {
      // G_r G_r = L_{2r}
      out = act_on_word(Mode::L(x.twice_index), rest);
    } else {
      const Rational sign = (x.is_odd() && w1.is_odd()) ? -1 : 1;
      for (const auto& [w2, c2] : act_on_terms(w1, act_on_word(x, rest))) add_to(out, w2, sign * c2);
      const AlgebraElement br = bracket(flavor_, x, w1, c_);
      for (const auto& [bw, bc] : br.terms()) {
        if (bw.empty()) {
          add_to(out, rest, bc);
        } else {
          for (const auto& [w2, c2] : act_on_word(bw.front(), rest)) add_to(out, w2, bc * c2);
        }
      }
    }
  }
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, std::move(out)).first->second;
}

VermaVector VermaModule::act(const Mode& m, const VermaVector& v) const {
  check_flavor(flavor_, m);
  if (v.flavor != flavor_ || v.c != c_ || v.h != h_)
    throw std::invalid_argument("vector does not belong to this Verma module");
  VermaVector out{flavor_, c_, h_, HalfInt{v.level.twice - m.twice_index}, act_on_terms(m, v.entries)};
  return out;
}

VermaVector VermaModule::act(const AlgebraElement& e, const VermaVector& v) const {
  VermaVector out{flavor_, c_, h_, v.level, {}};
  bool level_set = false;
  for (const auto& [w, c] : e.terms()) {
    VermaVector cur = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act(*it, cur);
    if (!level_set) {
      out.level = cur.level;
      level_set = true;
    } else if (cur.level != out.level && !cur.is_zero()) {
      throw std::invalid_argument("element is not homogeneous");
    }
    for (const auto& [w2, c2] : cur.entries) add_to(out.entries, w2, c * c2);
  }
  return out;
}

VermaVector VermaModule::reduce(const AlgebraElement& e) const { return act(e, highest_weight_vector()); }

VermaVector apply_mode(const Mode& m, const VermaVector& v) {
  VermaModule module(v.flavor, v.c, v.h);
  return module.act(m, v);
}

VermaVector apply_element(const AlgebraElement& e, const VermaVector& v) {
  VermaModule module(v.flavor, v.c, v.h);
  return module.act(e, v);
}

// ---------------------------------------------------------------------------

std::vector<Mode> annihilation_generators(Flavor flavor) {
  if (flavor == Flavor::Virasoro) return {Mode::L(1), Mode::L(2)};
  return {Mode::G(1), Mode::G(3)};
}

std::vector<VermaVector> singular_vectors(Flavor flavor, const Rational& c, const Rational& h, HalfInt n) {
  if (n.twice <= 0) throw std::invalid_argument("singular vector level must be positive");
  VermaModule module(flavor, c, h);
  const auto basis = level_basis(flavor, n);

  // Stack the images of every basis word under every generator.
  std::vector<std::map<Word, std::size_t>> row_index;
  std::size_t rows = 0;
  const auto gens = annihilation_generators(flavor);
  for (const auto& g : gens) {
    std::map<Word, std::size_t> idx;
    const HalfInt target{n.twice - g.twice_index};
    if (target.twice >= 0)
      for (const auto& w : level_basis(flavor, target)) idx.emplace(w, rows++);
    row_index.push_back(std::move(idx));
  }
  RationalMatrix m(rows, basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const VermaVector bv = module.vector_from_word(basis[col]);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (row_index[gi].empty()) continue;
      for (const auto& [w, c] : module.act(gens[gi], bv).entries) m(row_index[gi].at(w), col) = c;
    }
  }

  std::vector<VermaVector> out;
  for (auto& vec : nullspace(m)) {
    VermaVector v{flavor, c, h, n, {}};
    Rational first = 0;
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (vec[i] == 0) continue;
      if (first == 0) first = vec[i];
      v.entries.emplace(basis[i], vec[i] / first);
    }
    out.push_back(std::move(v));
  }
  return out;
}

GramMatrix gram_matrix(Flavor flavor, const Rational& c, const Rational& h, HalfInt n) {
  VermaModule module(flavor, c, h);
  GramMatrix g{n, level_basis(flavor, n), {}};
  const std::size_t dim = g.basis.size();
  g.entries = RationalMatrix(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      // <b_i v, b_j v> = vacuum coefficient of b_i^dagger b_j v.
      VermaVector cur = module.vector_from_word(g.basis[j]);
      for (const auto& m : g.basis[i]) cur = module.act(Mode{m.kind, -m.twice_index}, cur);
      const Rational val = cur.coefficient({});
      g.entries(i, j) = val;
      g.entries(j, i) = val;
    }
  }
  return g;
}

// ---------------------------------------------------------------------------

KacPoint kac_data(Flavor flavor, int p, int q, const Rational& t) {
  if (t == 0) throw std::invalid_argument("Kac curves are undefined at t = 0");
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
  KacPoint k{p, q, t, 0, 0};
  const Rational pp(p), qq(q);
  if (flavor == Flavor::Virasoro) {
    k.c_of_t = 13 - 6 * t - 6 / t;
    k.h_of_t = (1 - pp * pp) / 4 / t - (1 - pp * qq) / 2 + (1 - qq * qq) / 4 * t;
  } else {
    if ((p - q) % 2 != 0) throw std::invalid_argument("NS Kac data requires p = q mod 2");
    k.c_of_t = Rational(15, 2) + 3 / t + 3 * t;
    k.h_of_t = (1 - pp * pp) / 8 / t + (1 - pp * qq) / 4 + (1 - qq * qq) / 8 * t;
  }
  return k;
}

void check_label(Flavor flavor, int label) {
  if (flavor == Flavor::Virasoro) {
    if (label < 0) throw std::invalid_argument("Virasoro labels are nonnegative integers");
  } else if (label < 1 || label % 2 == 0) {
    throw std::invalid_argument("NS labels are odd positive integers");
  }
}

Rational central_charge(Flavor flavor) { return flavor == Flavor::Virasoro ? Rational(1) : Rational(3, 2); }

Rational degenerate_weight(Flavor flavor, int label) {
  check_label(flavor, label);
  if (flavor == Flavor::Virasoro) return make_rational(static_cast<long>(label) * label, 4);
  return make_rational(static_cast<long>(label - 1) * (label - 1), 8);
}

HalfInt singular_level(Flavor flavor, int label) {
  check_label(flavor, label);
  return flavor == Flavor::Virasoro ? HalfInt::from_int(label + 1) : HalfInt{label};
}

}  // namespace degfusion
