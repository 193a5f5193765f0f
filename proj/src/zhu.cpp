#include "degfusion/zhu.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace degfusion {

namespace {

Polynomial2 zhu_factor(const Rational& y_coeff, const Rational& weight) {
  return Polynomial2::affine(y_coeff, -1, weight);
}

void require_creation(Flavor flavor, const Word& w) {
  for (const auto& m : w) {
    check_flavor(flavor, m);
    if (!m.is_creation()) throw std::invalid_argument("Zhu projection expects negative modes only, got " + m.to_string());
  }
}

}  // namespace

Polynomial2 zhu_project_vir(const AlgebraElement& e, const Rational& h1) {
  Polynomial2 out;
  for (const auto& [w, c] : e.terms()) {
    require_creation(Flavor::Virasoro, w);
    Polynomial2 term(c);
    Rational weight = h1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const Rational j = it->level().value();
      term *= zhu_factor(j, weight);
      weight += j;
    }
    out += term;
  }
  return out;
}

ZhuImage zhu_project_ns(const AlgebraElement& e, const Rational& h1) {
  for (const auto& [w, c] : e.terms()) require_creation(Flavor::NS, w);
  ZhuImage image{Flavor::NS, {}, {}};
  const AlgebraElement ordered = order_l_before_g(Flavor::NS, e);
  for (const auto& [w, c] : ordered.terms()) {
    // Weight to the right of each position.
    std::vector<Rational> right(w.size() + 1);
    right[w.size()] = h1;
    for (std::size_t i = w.size(); i-- > 0;) right[i] = right[i + 1] + w[i].level().value();

    Polynomial2 term(c);
    std::size_t pos = 0;
    for (; pos < w.size() && !w[pos].is_odd(); ++pos) term *= zhu_factor(w[pos].level().value(), right[pos + 1]);
    // G-string: consume pairs from the left.
    for (; pos + 1 < w.size(); pos += 2) {
      const Rational inner = w[pos + 1].level().value();  // m + 1/2
      term *= zhu_factor(2 * inner, right[pos + 2]);
    }
    if (pos < w.size()) {
      image.odd += term;
    } else {
      image.even += term;
    }
  }
  return image;
}

AlgebraElement element_of(const VermaVector& v) {
  AlgebraElement e;
  for (const auto& [w, c] : v.entries) e.add(w, c);
  return e;
}

VermaVector degenerate_singular_vector(Flavor flavor, int label) {
  static std::mutex mutex;
  static std::map<std::pair<Flavor, int>, VermaVector> cache;
  const auto key = std::make_pair(flavor, label);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto vs = singular_vectors(flavor, central_charge(flavor), degenerate_weight(flavor, label),
                             singular_level(flavor, label));
  if (vs.size() != 1)
    throw std::logic_error("expected a unique singular vector for label " + std::to_string(label) + ", found " +
                           std::to_string(vs.size()));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(vs.front())).first->second;
}

Polynomial1 fusion_poly_vir(int m, int n) {
  check_label(Flavor::Virasoro, m);
  check_label(Flavor::Virasoro, n);
  const VermaVector s = degenerate_singular_vector(Flavor::Virasoro, m);
  return specialize_y(zhu_project_vir(element_of(s), s.h), degenerate_weight(Flavor::Virasoro, n));
}

Rational density_multiplier(int j, int r, const Rational& mu, const Rational& lambda) {
  const int k = -j;
  return mu + r + lambda * (k + 1);
}

Polynomial1 density_project_vir(const AlgebraElement& e, int m, int n) {
  const Rational lambda = -degenerate_weight(Flavor::Virasoro, n);
  const Rational mu_const = degenerate_weight(Flavor::Virasoro, n) + degenerate_weight(Flavor::Virasoro, m);
  Polynomial1 out;
  for (const auto& [w, c] : e.terms()) {
    require_creation(Flavor::Virasoro, w);
    Polynomial1 term(c);
    int r = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const int j = -it->twice_index / 2;
      // mu carries the symbolic -x.
      term *= Polynomial1({density_multiplier(j, r, mu_const, lambda), Rational(-1)});
      r += j;
    }
    out += term;
  }
  return out;
}

NSFusionPolys fusion_polys_ns(int q, int r) {
  check_label(Flavor::NS, q);
  check_label(Flavor::NS, r);
  const VermaVector s = degenerate_singular_vector(Flavor::NS, q);
  const Rational y = degenerate_weight(Flavor::NS, r);
  NSFusionPolys out;
  out.q1 = specialize_y(zhu_project_ns(element_of(s), s.h).odd, y);
  VermaModule module(Flavor::NS, s.c, s.h);
  const VermaVector gs = module.act(Mode::G(-1), s);
  out.q2 = specialize_y(zhu_project_ns(element_of(gs), s.h).even, y);
  return out;
}

}  // namespace degfusion
