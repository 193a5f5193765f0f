#include "degfusion/fusion.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "degfusion/verma.hpp"
#include "degfusion/zhu.hpp"

namespace degfusion {

std::string to_string(ChannelParity p) {
  switch (p) {
    case ChannelParity::Even:
      return "even";
    case ChannelParity::Odd:
      return "odd";
    case ChannelParity::None:
      break;
  }
  return "none";
}

namespace {

// Label whose degenerate weight equals x, if any.
std::optional<int> label_of_weight(Flavor flavor, const Rational& x) {
  // Virasoro: x = r^2/4; NS: x = (s-1)^2/8.
  const Rational sq = flavor == Flavor::Virasoro ? 4 * x : 8 * x;
  if (sq < 0 || sq.get_den() != 1) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), sq.get_num().get_mpz_t());
  if (root * root != sq.get_num() || !root.fits_sint_p()) return std::nullopt;
  const int r = static_cast<int>(root.get_si());
  return flavor == Flavor::Virasoro ? r : r + 1;
}

std::set<int> common_labels(Flavor flavor, const Polynomial1& p, const Polynomial1& q) {
  if (p.is_zero() || q.is_zero()) throw std::logic_error("fusion polynomial vanished identically");
  std::set<int> out;
  const auto rq = rational_roots(q);
  for (const auto& [root, mult] : rational_roots(p)) {
    if (!rq.count(root)) continue;
    if (auto label = label_of_weight(flavor, root)) out.insert(*label);
  }
  return out;
}

}  // namespace

int fusion_coeff_vir(int m, int n, int r) {
  check_label(Flavor::Virasoro, r);
  const Rational x = degenerate_weight(Flavor::Virasoro, r);
  return fusion_poly_vir(m, n)(x) == 0 && fusion_poly_vir(n, m)(x) == 0 ? 1 : 0;
}

NSCoefficient fusion_coeff_ns(int q, int r, int s) {
  check_label(Flavor::NS, s);
  const Rational x = degenerate_weight(Flavor::NS, s);
  const NSFusionPolys qr = fusion_polys_ns(q, r);
  const NSFusionPolys rq = fusion_polys_ns(r, q);
  const bool odd = qr.q1(x) == 0 && rq.q1(x) == 0;
  const bool even = qr.q2(x) == 0 && rq.q2(x) == 0;
  if (odd && even) throw std::logic_error("channel " + std::to_string(s) + " is both even and odd");
  if (odd) return {1, ChannelParity::Odd};
  if (even) return {1, ChannelParity::Even};
  return {0, ChannelParity::None};
}

std::vector<Channel> fusion_channels(Flavor flavor, int a, int b) {
  std::vector<Channel> out;
  if (flavor == Flavor::Virasoro) {
    for (int r : common_labels(flavor, fusion_poly_vir(a, b), fusion_poly_vir(b, a)))
      out.push_back({r, ChannelParity::None});
    return out;
  }
  const NSFusionPolys ab = fusion_polys_ns(a, b);
  const NSFusionPolys ba = fusion_polys_ns(b, a);
  const std::set<int> odd = common_labels(flavor, ab.q1, ba.q1);
  const std::set<int> even = common_labels(flavor, ab.q2, ba.q2);
  for (int s : odd) {
    if (even.count(s)) throw std::logic_error("channel " + std::to_string(s) + " is both even and odd");
    out.push_back({s, ChannelParity::Odd});
  }
  for (int s : even) out.push_back({s, ChannelParity::Even});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> table_labels(Flavor flavor, int bound) {
  if (bound < 1) throw std::invalid_argument("table bound must be positive");
  std::vector<int> out;
  if (flavor == Flavor::Virasoro) {
    for (int m = 0; m <= bound; ++m) out.push_back(m);
  } else {
    for (int q = 1; q <= bound; q += 2) out.push_back(q);
  }
  return out;
}

const std::vector<Channel>& FusionTable::product(int a, int b) const {
  auto it = products.find({a, b});
  if (it == products.end())
    throw std::out_of_range("product " + std::to_string(a) + " x " + std::to_string(b) + " is not in the table");
  return it->second;
}

int FusionTable::constant(int a, int b, int s) const {
  const auto& ch = product(a, b);
  return std::any_of(ch.begin(), ch.end(), [s](const Channel& c) { return c.label == s; }) ? 1 : 0;
}

FusionTable fusion_ring(Flavor flavor, int bound) {
  const auto labels = table_labels(flavor, bound);
  FusionTable t{flavor, bound, {}};
  std::vector<std::pair<int, int>> pairs;
  for (int a : labels)
    for (int b : labels) pairs.emplace_back(a, b);

  // Warm the singular-vector cache one label at a time, then fan out.
  for (int a : labels) degenerate_singular_vector(flavor, a);
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<Channel>> results(pairs.size());
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < pairs.size(); i += workers)
        results[i] = fusion_channels(flavor, pairs[i].first, pairs[i].second);
    }));
  }
  for (auto& j : jobs) j.get();
  for (std::size_t i = 0; i < pairs.size(); ++i) t.products.emplace(pairs[i], std::move(results[i]));
  return t;
}

namespace {

using LabelCounts = std::map<int, long>;

std::string show(const LabelCounts& c) {
  std::string out = "{";
  for (const auto& [label, mult] : c) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(label);
    if (mult != 1) out += "^" + std::to_string(mult);
  }
  return out + "}";
}

// (lhs x rhs) expanded; nullopt when an intermediate label leaves the table.
std::optional<LabelCounts> multiply(const FusionTable& t, const LabelCounts& lhs, int rhs) {
  LabelCounts out;
  for (const auto& [label, mult] : lhs) {
    if (!t.products.count({label, rhs})) return std::nullopt;
    for (const auto& ch : t.product(label, rhs)) out[ch.label] += mult;
  }
  return out;
}

std::optional<LabelCounts> multiply(const FusionTable& t, int lhs, const LabelCounts& rhs) {
  LabelCounts out;
  for (const auto& [label, mult] : rhs) {
    if (!t.products.count({lhs, label})) return std::nullopt;
    for (const auto& ch : t.product(lhs, label)) out[ch.label] += mult;
  }
  return out;
}

}  // namespace

RingReport ring_report(const FusionTable& t) {
  constexpr std::size_t kMaxWitnesses = 8;
  RingReport report;
  auto witness = [&](std::string w) {
    if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(std::move(w));
  };
  const auto labels = table_labels(t.flavor, t.bound);
  const std::string name = t.flavor == Flavor::Virasoro ? "a" : "b";

  for (int a : labels) {
    for (int b : labels) {
      if (b < a) continue;
      if (t.product(a, b) != t.product(b, a)) {
        report.commutative = false;
        witness(name + "(" + std::to_string(a) + ") x " + name + "(" + std::to_string(b) + ") is not symmetric");
      }
    }
  }

  const int unit = labels.front();
  for (int a : labels) {
    const std::vector<Channel> expected{{a, t.flavor == Flavor::Virasoro ? ChannelParity::None : ChannelParity::Even}};
    if (t.product(unit, a) != expected || t.product(a, unit) != expected) {
      report.unital = false;
      witness(name + "(" + std::to_string(unit) + ") does not act as identity on " + name + "(" + std::to_string(a) +
              ")");
    }
  }

  for (int a : labels) {
    for (int b : labels) {
      for (int c : labels) {
        auto left = multiply(t, LabelCounts{{a, 1}}, b);
        if (left) left = multiply(t, *left, c);
        auto right = multiply(t, b, LabelCounts{{c, 1}});
        if (right) right = multiply(t, a, *right);
        if (!left || !right) continue;
        ++report.triples_checked;
        if (*left != *right) {
          report.associative = false;
          witness("(" + std::to_string(a) + " x " + std::to_string(b) + ") x " + std::to_string(c) + " = " +
                  show(*left) + " but " + std::to_string(a) + " x (" + std::to_string(b) + " x " +
                  std::to_string(c) + ") = " + show(*right));
        }
      }
    }
  }
  return report;
}

}  // namespace degfusion
