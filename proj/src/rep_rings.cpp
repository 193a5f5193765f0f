#include "degfusion/rep_rings.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "degfusion/verma.hpp"

namespace degfusion {

std::string to_string(RepAlgebra a) { return a == RepAlgebra::SL2 ? "sl2" : "osp"; }

RepAlgebra parse_rep_algebra(std::string_view text) {
  if (text == "sl2") return RepAlgebra::SL2;
  if (text == "osp") return RepAlgebra::OSP;
  throw std::invalid_argument("unknown representation algebra: " + std::string(text));
}

RepLabel RepLabel::sl2(int doubled) {
  if (doubled < 0) throw std::invalid_argument("sl2 labels are nonnegative");
  return {RepAlgebra::SL2, HalfInt::from_int(doubled)};
}

RepLabel RepLabel::osp(HalfInt j) {
  if (j.twice < 0) throw std::invalid_argument("osp(1|2) labels are nonnegative");
  return {RepAlgebra::OSP, j};
}

long RepLabel::dimension() const {
  // sl2: j+1; osp: 4j+1 = 2*(2j)+1
  return algebra == RepAlgebra::SL2 ? j.twice / 2 + 1 : 2L * j.twice + 1;
}

std::string RepLabel::to_string() const { return degfusion::to_string(algebra) + ":" + degfusion::to_string(j); }

long dimension(const RepMultiset& m) {
  long out = 0;
  for (const auto& [label, mult] : m) out += label.dimension() * mult;
  return out;
}

namespace {

void validate(const RepLabel& l) {
  if (l.j.twice < 0) throw std::invalid_argument("negative representation label");
  if (l.algebra == RepAlgebra::SL2 && !l.j.is_integer())
    throw std::invalid_argument("sl2 doubled labels are integers");
}

void same_algebra(const RepLabel& a, const RepLabel& b, RepAlgebra expected) {
  validate(a);
  validate(b);
  if (a.algebra != expected || b.algebra != expected)
    throw std::invalid_argument("tensor product of " + a.to_string() + " and " + b.to_string() + " mixes algebras");
}

}  // namespace

RepMultiset sl2_tensor(const RepLabel& a, const RepLabel& b) {
  same_algebra(a, b, RepAlgebra::SL2);
  const int j1 = a.j.twice / 2, j2 = b.j.twice / 2;
  RepMultiset out;
  for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 2) out[RepLabel::sl2(j3)] += 1;
  return out;
}

RepMultiset osp_tensor(const RepLabel& a, const RepLabel& b) {
  same_algebra(a, b, RepAlgebra::OSP);
  RepMultiset out;
  for (int k = std::abs(a.j.twice - b.j.twice); k <= a.j.twice + b.j.twice; ++k) out[RepLabel::osp(HalfInt{k})] += 1;
  return out;
}

std::vector<HalfInt> weights(const RepLabel& label) {
  validate(label);
  std::vector<HalfInt> out;
  if (label.algebra == RepAlgebra::SL2) {
    for (int m = label.j.twice; m >= -label.j.twice; m -= 4) out.push_back(HalfInt{m});
  } else {
    for (int i = label.j.twice; i >= -label.j.twice; --i) out.push_back(HalfInt::from_int(i));
  }
  return out;
}

std::vector<HalfInt> tensor_weights(const RepLabel& a, const RepLabel& b) {
  std::vector<HalfInt> out;
  for (const auto& wa : weights(a))
    for (const auto& wb : weights(b)) out.push_back(HalfInt{wa.twice + wb.twice});
  return out;
}

RepMultiset weight_decompose(const std::vector<HalfInt>& ws, RepAlgebra algebra) {
  std::map<int, long> counts;  // twice the weight
  for (const auto& w : ws) counts[w.twice] += 1;
  RepMultiset out;
  while (!counts.empty()) {
    const int top = counts.rbegin()->first;
    if (top < 0) throw std::invalid_argument("weight multiset has no nonnegative highest weight");
    RepLabel label = algebra == RepAlgebra::SL2 ? RepLabel{RepAlgebra::SL2, HalfInt{top}}
                                                 : RepLabel{RepAlgebra::OSP, HalfInt{top / 2}};
    if (top % 2 != 0)
      throw std::invalid_argument("weight " + to_string(HalfInt{top}) + " is not an integral h-eigenvalue");
    for (const auto& w : weights(label)) {
      auto it = counts.find(w.twice);
      if (it == counts.end()) throw std::invalid_argument("weight multiset is not a module character");
      if (--it->second == 0) counts.erase(it);
    }
    out[label] += 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

MatrixRealization matrices(const RepLabel& label) {
  validate(label);
  MatrixRealization out{label, {}};
  const auto dim = static_cast<std::size_t>(label.dimension());
  for (const char* g : {"x", "y", "h"}) out.generators.emplace(g, DenseMatrix(dim));
  auto& x = out.generators.at("x");
  auto& y = out.generators.at("y");
  auto& h = out.generators.at("h");

  if (label.algebra == RepAlgebra::SL2) {
    // Basis u_j(j - 2k), k = 0..j.
    const double j = label.j.twice / 2;
    for (std::size_t k = 0; k < dim; ++k) {
      const double m = j - 2.0 * k;
      h(k, k) = m;
      if (k > 0) x(k - 1, k) = std::sqrt((j + m + 2) * (j - m)) / 2;
      if (k + 1 < dim) y(k + 1, k) = std::sqrt((j + m) * (j - m + 2)) / 2;
    }
    return out;
  }

  auto& phi = out.generators.emplace("phi", DenseMatrix(dim)).first->second;
  auto& chi = out.generators.emplace("chi", DenseMatrix(dim)).first->second;
  // Basis v_i, i = j - k/2; index arithmetic in halves.
  const int tj = label.j.twice;
  auto br = [](double a) { return std::floor(a); };
  for (std::size_t k = 0; k < dim; ++k) {
    const int ti = tj - static_cast<int>(k);
    const double i = ti / 2.0, j = tj / 2.0;
    h(k, k) = 2 * i;
    if (k >= 2) x(k - 2, k) = std::sqrt(br(j - i) * br(j + i + 1));
    if (k + 2 < dim) y(k + 2, k) = std::sqrt(br(j + i) * br(j - i + 1));
    const bool integral = (tj - ti) % 2 == 0;  // i - j in Z
    if (integral) {
      if (k + 1 < dim) phi(k + 1, k) = -std::sqrt(j + i);
      if (k >= 1) chi(k - 1, k) = -std::sqrt(j - i);
    } else {
      if (k + 1 < dim) phi(k + 1, k) = std::sqrt(j - i + 0.5);
      if (k >= 1) chi(k - 1, k) = -std::sqrt(j + i + 0.5);
    }
  }
  return out;
}

namespace {

DenseMatrix mul(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.n);
  for (std::size_t r = 0; r < a.n; ++r)
    for (std::size_t k = 0; k < a.n; ++k) {
      const double v = a(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < a.n; ++c) out(r, c) += v * b(k, c);
    }
  return out;
}

DenseMatrix combine(const DenseMatrix& a, double sa, const DenseMatrix& b, double sb) {
  DenseMatrix out(a.n);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = sa * a.data[i] + sb * b.data[i];
  return out;
}

double max_abs(const DenseMatrix& m) {
  double out = 0;
  for (double v : m.data) out = std::max(out, std::abs(v));
  return out;
}

}  // namespace

std::vector<RelationResidual> relation_residuals(const MatrixRealization& m) {
  const auto& g = m.generators;
  const DenseMatrix zero(m.generators.at("h").n);
  auto get = [&](const std::string& name) -> const DenseMatrix& { return name == "0" ? zero : g.at(name); };
  // lhs = [a, b] (sign -1) or {a, b} (sign +1); rhs = k * c
  auto check = [&](const std::string& a, const std::string& b, double sign, double k,
                   const std::string& c) {
    const DenseMatrix lhs = combine(mul(get(a), get(b)), 1, mul(get(b), get(a)), sign);
    return max_abs(combine(lhs, 1, get(c), -k));
  };
  std::vector<RelationResidual> out;
  auto add = [&](const std::string& text, const std::string& a, const std::string& b, double sign, double k,
                 const std::string& c, bool printed, bool consistent) {
    out.push_back({text, check(a, b, sign, k, c), printed, consistent});
  };
  add("[h,x]=2x", "h", "x", -1, 2, "x", true, true);
  add("[h,y]=-2y", "h", "y", -1, -2, "y", true, true);
  add("[x,y]=h", "x", "y", -1, 1, "h", true, true);
  if (m.label.algebra == RepAlgebra::SL2) return out;
  add("[h,phi]=-phi", "h", "phi", -1, -1, "phi", true, true);
  add("[h,chi]=chi", "h", "chi", -1, 1, "chi", true, true);
  add("{chi,chi}=2x", "chi", "chi", 1, 2, "x", true, true);
  // Displayed relations the displayed matrices do not satisfy.
  add("[x,chi]=chi", "x", "chi", -1, 1, "chi", true, false);
  add("[x,phi]=-phi", "x", "phi", -1, -1, "phi", true, false);
  add("[y,chi]=-chi", "y", "chi", -1, -1, "chi", true, false);
  add("[y,phi]=phi", "y", "phi", -1, 1, "phi", true, false);
  add("{chi,phi}=2h", "chi", "phi", 1, 2, "h", true, false);
  add("{phi,phi}=2y", "phi", "phi", 1, 2, "y", true, false);
  // Their self-consistent replacements.
  add("[x,chi]=0", "x", "chi", -1, 0, "0", false, true);
  add("[x,phi]=-chi", "x", "phi", -1, -1, "chi", false, true);
  add("[y,chi]=-phi", "y", "chi", -1, -1, "phi", false, true);
  add("[y,phi]=0", "y", "phi", -1, 0, "0", false, true);
  add("{chi,phi}=h", "chi", "phi", 1, 1, "h", false, true);
  add("{phi,phi}=-2y", "phi", "phi", 1, -2, "y", false, true);
  return out;
}

double max_consistent_residual(const MatrixRealization& m) {
  double out = 0;
  for (const auto& r : relation_residuals(m))
    if (r.consistent) out = std::max(out, r.residual);
  return out;
}

// ---------------------------------------------------------------------------

double sl2_cg(int j1, int j2, int j3, int m1, int m2) {
  auto valid = [](int j, int m) { return j >= 0 && std::abs(m) <= j && (j - m) % 2 == 0; };
  if (!valid(j1, m1) || !valid(j2, m2) || j3 < 0) throw std::invalid_argument("malformed Clebsch-Gordan labels");
  if (j3 < std::abs(j1 - j2) || j3 > j1 + j2 || (j1 + j2 - j3) % 2 != 0) return 0.0;
  const int m3 = m1 + m2;
  if (std::abs(m3) > j3) return 0.0;

  auto xa = [](int j, int m) { return std::sqrt(double(j + m + 2) * (j - m)) / 2; };
  auto ya = [](int j, int m) { return std::sqrt(double(j + m) * (j - m + 2)) / 2; };

  // Highest vector of V(j3): coefficients c[a] on u(a) (x) u(j3 - a), killed
  // by x. Fill upward from the smallest admissible a.
  const int lo = std::max(-j1, j3 - j2), hi = std::min(j1, j3 + j2);
  std::map<int, double> top;
  top[lo] = 1.0;
  for (int a = lo + 2; a <= hi; a += 2) top[a] = -top[a - 2] * xa(j1, a - 2) / xa(j2, j3 - a);
  double norm = 0;
  for (const auto& [a, c] : top) norm += c * c;
  norm = std::sqrt(norm) * (top.rbegin()->second < 0 ? -1 : 1);
  for (auto& [a, c] : top) c /= norm;

  // Lower with y (x) 1 + 1 (x) y down to m3.
  std::map<int, double> vec = top;  // keyed by first weight; second = weight - first
  for (int w = j3; w > m3; w -= 2) {
    std::map<int, double> next;
    for (const auto& [a, c] : vec) {
      const int b = w - a;
      if (a - 2 >= -j1) next[a - 2] += c * ya(j1, a);
      if (b - 2 >= -j2) next[a] += c * ya(j2, b);
    }
    for (auto& [a, c] : next) c /= ya(j3, w);
    vec = std::move(next);
  }
  auto it = vec.find(m1);
  return it == vec.end() ? 0.0 : it->second;
}

// ---------------------------------------------------------------------------

RepLabel rep_label_of(Flavor flavor, int label) {
  check_label(flavor, label);
  if (flavor == Flavor::Virasoro) return RepLabel::sl2(label);
  // b(m) -> V((m-1)/4): twice j = (m-1)/2
  return RepLabel::osp(HalfInt{(label - 1) / 2});
}

std::optional<std::string> iso_counterexample(const FusionTable& t) {
  const auto labels = table_labels(t.flavor, t.bound);
  for (int a : labels) {
    for (int b : labels) {
      if (!t.products.count({a, b}))
        throw std::invalid_argument("table is missing the product " + std::to_string(a) + " x " + std::to_string(b));
      const RepLabel la = rep_label_of(t.flavor, a), lb = rep_label_of(t.flavor, b);
      const RepMultiset expected = t.flavor == Flavor::Virasoro ? sl2_tensor(la, lb) : osp_tensor(la, lb);
      RepMultiset got;
      for (const auto& ch : t.product(a, b)) got[rep_label_of(t.flavor, ch.label)] += 1;
      if (got != expected) {
        auto show = [](const RepMultiset& m) {
          std::string s = "{";
          for (const auto& [l, k] : m) s += (s.size() > 1 ? ", " : "") + l.to_string() + (k != 1 ? "^" + std::to_string(k) : "");
          return s + "}";
        };
        return std::to_string(a) + " x " + std::to_string(b) + ": table gives " + show(got) + ", tensor rule gives " +
               show(expected);
      }
    }
  }
  return std::nullopt;
}

bool iso_check(const FusionTable& t) { return !iso_counterexample(t).has_value(); }

}  // namespace degfusion
