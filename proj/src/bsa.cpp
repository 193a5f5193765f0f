#include "degfusion/bsa.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace degfusion {

AlgebraElement bsa_vir_c1(int q) {
  if (q < 1) throw std::invalid_argument("BSA label q must be positive");
  AlgebraElement out;
  std::vector<int> parts;
  std::function<void(int)> compose = [&](int remaining) {
    if (remaining == 0) {
      std::vector<bool> partial(q + 1, false);
      int s = 0;
      for (int p : parts) partial[s += p] = true;
      Rational coeff = 1;
      for (int k = 1; k < q; ++k)
        if (!partial[k]) coeff *= Rational(static_cast<long>(k) * (q - k));
      Word w;
      for (int p : parts) w.push_back(Mode::L(-p));
      out.add(w, coeff);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      parts.push_back(p);
      compose(remaining - p);
      parts.pop_back();
    }
  };
  compose(q);
  return out;
}

namespace {

Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

AlgebraElement bsa_ns(int q) {
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("N=1 BSA label q must be odd and positive");
  AlgebraElement out;
  std::vector<int> parts;  // non-increasing odd parts
  std::function<void(int, int)> partition = [&](int remaining, int max_part) {
    if (remaining == 0) {
      const int n = static_cast<int>(parts.size());
      const Rational sign = ((q - n) / 2) % 2 == 0 ? 1 : -1;
      Rational binoms = 1;
      for (int k : parts) binoms *= Rational(binomial(k - 1, (k - 1) / 2));
      // Identical orderings of repeated parts are separate terms of the
      // sum over S_N; count them once with multiplicity prod(mult!).
      Integer repeats = 1;
      for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        repeats *= f;
        i = j;
      }
      std::vector<int> perm(parts.rbegin(), parts.rend());  // ascending
      do {
        Rational coeff = sign * binoms * Rational(repeats);
        for (int j = 1; 2 * j <= n - 1; ++j) {
          long sigma = 0, rho = 0;
          for (int l = 0; l < 2 * j; ++l) sigma += perm[l];
          for (int l = 2 * j - 1; l < n; ++l) rho += perm[l];
          coeff *= Rational(4) / Rational(sigma * rho);
        }
        Word w;
        for (int k : perm) w.push_back(Mode::G(-k));
        out.add(w, coeff);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
      if (p % 2 == 0) continue;
      parts.push_back(p);
      partition(remaining - p, p);
      parts.pop_back();
    }
  };
  partition(q, q);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Rational sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

const std::vector<ConventionMap>& convention_maps() {
  static const std::vector<ConventionMap> maps{
      {"identity", [](int, int) -> Rational { return Rational(1); }},
      {"L->-L", [](int l, int) -> Rational { return sign_of(l); }},
      {"L->-L,G-phase", [](int l, int g) -> Rational { return sign_of(l) * sign_of(g / 2); }},
      {"mode-count-sign", [](int l, int g) -> Rational { return sign_of(l + g); }},
  };
  return maps;
}

AlgebraElement apply_convention(const ConventionMap& map, const AlgebraElement& e) {
  AlgebraElement out;
  for (const auto& [w, c] : e.terms()) {
    int l = 0, g = 0;
    for (const auto& m : w) (m.is_odd() ? g : l) += 1;
    out.add(w, c * map.sign(l, g));
  }
  return out;
}

std::optional<Rational> proportionality_ratio(const VermaVector& a, const VermaVector& b) {
  if (a.is_zero() || b.is_zero() || a.entries.size() != b.entries.size()) return std::nullopt;
  std::optional<Rational> ratio;
  for (const auto& [w, cb] : b.entries) {
    auto it = a.entries.find(w);
    if (it == a.entries.end()) return std::nullopt;
    Rational r = it->second / cb;
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

bool CalibrationReport::any_match() const {
  return std::any_of(maps.begin(), maps.end(), [](const CalibrationEntry& e) { return e.match; });
}

CalibrationReport calibrate(const AlgebraElement& candidate, Flavor flavor, const Rational& c, const Rational& h,
                            HalfInt n, int q) {
  CalibrationReport report{flavor, q, {}};
  VermaModule module(flavor, c, h);
  const auto solver = singular_vectors(flavor, c, h, n);
  for (const auto& map : convention_maps()) {
    CalibrationEntry entry{map.name, false, std::nullopt};
    const VermaVector reduced = module.reduce(apply_convention(map, candidate));
    if (solver.size() == 1 && reduced.level == n) {
      entry.ratio = proportionality_ratio(reduced, solver.front());
      entry.match = entry.ratio.has_value();
    }
    report.maps.push_back(std::move(entry));
  }
  return report;
}

}  // namespace degfusion
