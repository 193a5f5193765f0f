#include "degfusion/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "degfusion/bsa.hpp"
#include "degfusion/characters.hpp"
#include "degfusion/fusion.hpp"
#include "degfusion/json_io.hpp"
#include "degfusion/rep_rings.hpp"
#include "degfusion/verify.hpp"
#include "degfusion/zhu.hpp"

namespace degfusion {

namespace {

constexpr int kLevelCap = 16;  // in units of 1/2 for NS, checked via twice
constexpr long kOrderCap = 200;
constexpr int kDefaultOrder = 20;
constexpr int kDefaultBoundVir = 6;
constexpr int kDefaultBoundNs = 9;

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_level(Flavor flavor, int label) {
  if (singular_level(flavor, label).twice > 2 * kLevelCap)
    throw ResourceLimit("singular level " + to_string(singular_level(flavor, label)) + " exceeds the cap of " +
                        std::to_string(kLevelCap));
}

void require_order(const Rational& order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  if (order > kOrderCap) throw ResourceLimit("order exceeds the cap of " + std::to_string(kOrderCap));
}

void require_bound(Flavor flavor, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  const int top = flavor == Flavor::Virasoro ? bound : (bound % 2 == 0 ? bound - 1 : bound);
  require_level(flavor, top);
}

std::string show_roots(const std::map<Rational, int>& roots) {
  std::string out = "{";
  for (const auto& [r, k] : roots) out += (out.size() > 1 ? ", " : "") + to_string(r) + (k > 1 ? " (x" + std::to_string(k) + ")" : "");
  return out + "}";
}

std::string roots_text(const Polynomial1& p) { return p.is_zero() ? "all" : show_roots(rational_roots(p)); }

Json roots_json(const Polynomial1& p) {
  Json out = Json::array();
  for (const auto& [r, k] : rational_roots(p)) out.push_back({{"root", to_json(r)}, {"multiplicity", k}});
  return out;
}

std::string channels_text(const std::vector<Channel>& chs, Flavor flavor) {
  std::string out = "{";
  for (const auto& ch : chs) {
    out += (out.size() > 1 ? ", " : "") + std::to_string(ch.label);
    if (flavor == Flavor::NS) out += ":" + to_string(ch.parity);
  }
  return out + "}";
}

void print_calibration(std::ostream& out, const CalibrationReport& r) {
  out << "calibration (q=" << r.q << ", " << to_string(r.flavor) << ")\n";
  for (const auto& e : r.maps) {
    out << "  " << std::left << std::setw(18) << e.name << (e.match ? "match" : "no match");
    if (e.ratio) out << "  ratio " << to_string(*e.ratio);
    out << "\n";
  }
  if (!r.any_match()) out << "  note: no convention map reproduces the solver vector\n";
}

struct Options {
  std::string format = "text";
  std::string algebra = "vir";
  int q = 0, r = 0, m = 0, n = 0;
  std::optional<int> bound;
  std::string order = std::to_string(kDefaultOrder);
  std::string suite = "all";
  std::string h, h1, y, sector;
  std::optional<int> label;
  std::vector<std::string> terms;
};

bool json_out(const Options& o) { return o.format == "json"; }

int cmd_singular(const Options& o, std::ostream& out) {
  const Flavor flavor = parse_flavor(o.algebra);
  if (flavor == Flavor::Virasoro && o.q < 1) throw std::invalid_argument("Virasoro label q must be positive");
  // The Virasoro q is the level: h = (q-1)^2/4.
  const int label = flavor == Flavor::Virasoro ? o.q - 1 : o.q;
  check_label(flavor, label);
  require_level(flavor, label);
  const VermaVector s = degenerate_singular_vector(flavor, label);
  const AlgebraElement candidate = flavor == Flavor::Virasoro ? bsa_vir_c1(o.q) : bsa_ns(o.q);
  const CalibrationReport cal = calibrate(candidate, flavor, s.c, s.h, s.level, o.q);
  if (json_out(o)) {
    out << Json{{"vector", to_json(s)}, {"calibration", to_json(cal)}}.dump(2) << "\n";
    return kOk;
  }
  out << "M(" << to_string(s.c) << ", " << to_string(s.h) << ")  level " << to_string(s.level) << "\n";
  out << "singular vector: " << s.to_string() << "\n";
  print_calibration(out, cal);
  return kOk;
}

int cmd_fusion(const Options& o, std::ostream& out) {
  const Flavor flavor = parse_flavor(o.algebra);
  const int a = flavor == Flavor::Virasoro ? o.m : o.q;
  const int b = flavor == Flavor::Virasoro ? o.n : o.r;
  check_label(flavor, a);
  check_label(flavor, b);
  require_level(flavor, std::max(a, b));
  const auto channels = fusion_channels(flavor, a, b);
  if (flavor == Flavor::Virasoro) {
    const Polynomial1 ab = fusion_poly_vir(a, b), ba = fusion_poly_vir(b, a);
    if (json_out(o)) {
      out << Json{{"flavor", "vir"},
                  {"m", a},
                  {"n", b},
                  {"poly", to_json(ab)},
                  {"roots", roots_json(ab)},
                  {"poly_swapped", to_json(ba)},
                  {"roots_swapped", roots_json(ba)},
                  {"channels", to_json(channels, flavor)}}
                 .dump(2)
          << "\n";
      return kOk;
    }
    out << "P(" << a << "," << b << ") = " << ab.to_string() << "\n";
    out << "  roots " << roots_text(ab) << "\n";
    out << "P(" << b << "," << a << ") = " << ba.to_string() << "\n";
    out << "  roots " << roots_text(ba) << "\n";
    out << "a(" << a << ") x a(" << b << ") channels " << channels_text(channels, flavor) << "\n";
    return kOk;
  }
  const NSFusionPolys ab = fusion_polys_ns(a, b), ba = fusion_polys_ns(b, a);
  if (json_out(o)) {
    auto polys = [](const NSFusionPolys& p) {
      return Json{{"q1", to_json(p.q1)}, {"q1_roots", roots_json(p.q1)}, {"q2", to_json(p.q2)}, {"q2_roots", roots_json(p.q2)}};
    };
    out << Json{{"flavor", "ns"}, {"q", a}, {"r", b}, {"polys", polys(ab)}, {"polys_swapped", polys(ba)},
                {"channels", to_json(channels, flavor)}}
               .dump(2)
        << "\n";
    return kOk;
  }
  for (const auto& [x, y, p] : {std::tuple{a, b, &ab}, std::tuple{b, a, &ba}}) {
    out << "Q1(" << x << "," << y << ") = " << p->q1.to_string() << "  roots " << roots_text(p->q1) << "\n";
    out << "Q2(" << x << "," << y << ") = " << p->q2.to_string() << "  roots " << roots_text(p->q2) << "\n";
  }
  out << "b(" << a << ") x b(" << b << ") channels " << channels_text(channels, flavor) << "\n";
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const Flavor flavor = parse_flavor(o.algebra);
  const int bound = o.bound.value_or(flavor == Flavor::Virasoro ? kDefaultBoundVir : kDefaultBoundNs);
  require_bound(flavor, bound);
  const FusionTable t = fusion_ring(flavor, bound);
  const RingReport ring = ring_report(t);
  const auto iso = iso_counterexample(t);
  const bool ok = ring.passed() && !iso;
  if (json_out(o)) {
    Json j = to_json(t);
    j["ring_report"] = to_json(ring);
    j["iso_check"] = !iso;
    if (iso) j["iso_counterexample"] = *iso;
    out << j.dump(2) << "\n";
    return ok ? kOk : kVerificationFailed;
  }
  const std::string name = flavor == Flavor::Virasoro ? "a" : "b";
  for (const auto& [ab, chs] : t.products) {
    if (ab.first > ab.second) continue;
    out << std::right << std::setw(3) << ab.first << " x " << std::setw(2) << ab.second << "  "
        << channels_text(chs, flavor) << "\n";
  }
  out << "commutative " << (ring.commutative ? "yes" : "no") << ", associative " << (ring.associative ? "yes" : "no")
      << " (" << ring.triples_checked << " triples), unit " << (ring.unital ? "yes" : "no") << "\n";
  for (const auto& w : ring.witnesses) out << "  " << w << "\n";
  out << "isomorphic to Rep(" << (flavor == Flavor::Virasoro ? "sl2" : "osp(1|2)") << "): " << (iso ? "no" : "yes")
      << "\n";
  if (iso) out << "  " << *iso << "\n";
  return ok ? kOk : kVerificationFailed;
}

int cmd_chars(const Options& o, std::ostream& out) {
  const Rational order = parse_rational(o.order);
  require_order(order);
  const int given = !o.h.empty() + o.label.has_value() + !o.sector.empty();
  if (given != 1) throw std::invalid_argument("chars needs exactly one of --h, --label, --sector");
  QSeries s(0, 0);
  std::string what;
  if (!o.sector.empty()) {
    const SectorLabel sector = parse_sector(o.sector);
    s = ch_lattice(sector, order);
    what = "ch " + to_string(sector);
  } else {
    const Flavor flavor = parse_flavor(o.algebra);
    if (o.label) {
      s = flavor == Flavor::Virasoro ? ch_irr_c1(*o.label, order) : ch_irr_ns(*o.label, order);
      what = "ch L(" + to_string(central_charge(flavor)) + ", " + to_string(degenerate_weight(flavor, *o.label)) + ")";
    } else {
      const Rational h = parse_rational(o.h);
      s = ch_verma(flavor, h, order);
      what = "ch M(" + to_string(central_charge(flavor)) + ", " + to_string(h) + ")";
    }
  }
  if (json_out(o)) {
    out << Json{{"character", what}, {"bound", to_string(s.bound())}, {"terms", to_json(s)}}.dump(2) << "\n";
    return kOk;
  }
  out << what << " = " << s.to_string() << "\n";
  return kOk;
}

AlgebraElement parse_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) throw std::invalid_argument("zhu needs at least one --term coeff:mode,mode,...");
  AlgebraElement e;
  for (const auto& t : terms) {
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed term: " + t);
    const Rational c = parse_rational(t.substr(0, colon));
    Word w;
    std::stringstream modes(t.substr(colon + 1));
    for (std::string m; std::getline(modes, m, ',');)
      if (!m.empty()) w.push_back(parse_mode(m));
    e.add(w, c);
  }
  return e;
}

int cmd_zhu(const Options& o, std::ostream& out) {
  const Flavor flavor = parse_flavor(o.algebra);
  const AlgebraElement e = parse_terms(o.terms);
  const Rational h1 = parse_rational(o.h1.empty() ? "0" : o.h1);
  ZhuImage image{flavor, {}, {}};
  if (flavor == Flavor::Virasoro) {
    image.even = zhu_project_vir(e, h1);
  } else {
    image = zhu_project_ns(e, h1);
  }
  std::optional<Rational> y;
  if (!o.y.empty()) y = parse_rational(o.y);
  if (json_out(o)) {
    Json j = to_json(image);
    if (y) {
      j["y"] = to_json(*y);
      j["even_at_y"] = to_json(specialize_y(image.even, *y));
      j["odd_at_y"] = to_json(specialize_y(image.odd, *y));
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "element " << e.to_string() << ", h1 = " << to_string(h1) << "\n";
  out << "even: " << image.even.to_string() << "\n";
  if (flavor == Flavor::NS) out << "odd:  " << image.odd.to_string() << "\n";
  if (y) {
    out << "at y = " << to_string(*y) << ": even " << specialize_y(image.even, *y).to_string();
    if (flavor == Flavor::NS) out << ", odd " << specialize_y(image.odd, *y).to_string();
    out << "\n";
  }
  return kOk;
}

int cmd_calibrate(const Options& o, std::ostream& out) {
  const Flavor flavor = parse_flavor(o.algebra);
  if (flavor == Flavor::Virasoro && o.q < 1) throw std::invalid_argument("Virasoro label q must be positive");
  const int label = flavor == Flavor::Virasoro ? o.q - 1 : o.q;
  check_label(flavor, label);
  require_level(flavor, label);
  const AlgebraElement candidate = flavor == Flavor::Virasoro ? bsa_vir_c1(o.q) : bsa_ns(o.q);
  const CalibrationReport cal = calibrate(candidate, flavor, central_charge(flavor), degenerate_weight(flavor, label),
                                          singular_level(flavor, label), o.q);
  if (json_out(o)) {
    out << to_json(cal).dump(2) << "\n";
  } else {
    print_calibration(out, cal);
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  static const std::vector<std::string> suites{"fusion-vir", "fusion-ns", "chars", "reprings", "all"};
  if (std::find(suites.begin(), suites.end(), o.suite) == suites.end())
    throw std::invalid_argument("unknown suite: " + o.suite);
  const Rational order = parse_rational(o.order);
  require_order(order);
  const bool all = o.suite == "all";
  const int bound_vir = o.bound.value_or(kDefaultBoundVir), bound_ns = o.bound.value_or(kDefaultBoundNs);
  if (all || o.suite == "fusion-vir") require_bound(Flavor::Virasoro, bound_vir);
  if (all || o.suite == "fusion-ns") require_bound(Flavor::NS, bound_ns);

  std::vector<SuiteReport> reports;
  if (all || o.suite == "fusion-vir") reports.push_back(verify_fusion_vir(bound_vir));
  if (all || o.suite == "fusion-ns") reports.push_back(verify_fusion_ns(bound_ns));
  if (all || o.suite == "chars") reports.push_back(verify_chars(order));
  if (all || o.suite == "reprings") reports.push_back(verify_reprings());
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });

  if (json_out(o)) {
    Json js = Json::array();
    for (const auto& r : reports) {
      Json checks = Json::array();
      for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      js.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
    }
    out << Json{{"passed", ok}, {"suites", js}}.dump(2) << "\n";
    return ok ? kOk : kVerificationFailed;
  }
  for (const auto& r : reports) {
    out << r.suite << "\n";
    for (const auto& c : r.checks) {
      out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << "  [" << c.detail << "]";
      out << "\n";
    }
  }
  out << (ok ? "all checks passed" : "verification failed") << "\n";
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fusion rules for degenerate c=1 and c=3/2 models"};
  app.require_subcommand(1);
  Options o;
  auto algebra = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", o.algebra, "vir or ns")->check(CLI::IsMember({"vir", "ns"}))->capture_default_str();
  };
  auto format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };

  auto* singular = app.add_subcommand("singular", "singular vector at a degenerate weight, with BSA calibration");
  algebra(singular);
  singular->add_option("--q", o.q, "Virasoro: level (h=(q-1)^2/4); NS: odd label (h=(q-1)^2/8)")->required();
  format(singular);

  auto* fusion = app.add_subcommand("fusion", "fusion polynomials and channels of one product");
  algebra(fusion);
  fusion->add_option("--m", o.m, "Virasoro label");
  fusion->add_option("--n", o.n, "Virasoro label");
  fusion->add_option("--q", o.q, "NS label");
  fusion->add_option("--r", o.r, "NS label");
  format(fusion);

  auto* table = app.add_subcommand("table", "fusion ring up to a bound, with ring and isomorphism checks");
  algebra(table);
  table->add_option("--bound", o.bound, "largest label (default 6 vir, 9 ns)");
  format(table);

  auto* chars = app.add_subcommand("chars", "q-series characters");
  chars->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  algebra(chars);
  chars->add_option("--h", o.h, "Verma module weight");
  chars->add_option("--label", o.label, "irreducible degenerate module label");
  chars->add_option("--sector", o.sector, "lattice sector V_L or V_L_half");
  chars->add_option("--order", o.order, "truncation order")->capture_default_str();
  format(chars);

  auto* zhu = app.add_subcommand("zhu", "Zhu bimodule projection of an element");
  algebra(zhu);
  zhu->add_option("--term", o.terms, "coeff:mode,mode,... e.g. -1:L-2 (repeatable)");
  zhu->add_option("--h1", o.h1, "weight of the highest-weight vector");
  zhu->add_option("--y", o.y, "specialize y");
  format(zhu);

  auto* calibrate_cmd = app.add_subcommand("calibrate", "BSA closed form against the solver");
  algebra(calibrate_cmd);
  calibrate_cmd->add_option("--q", o.q, "BSA label")->required();
  format(calibrate_cmd);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "fusion-vir, fusion-ns, chars, reprings or all")->capture_default_str();
  verify->add_option("--bound", o.bound, "label bound (default 6 vir, 9 ns)");
  verify->add_option("--order", o.order, "character order")->capture_default_str();
  format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArguments;
  }

  try {
    if (*singular) return cmd_singular(o, out);
    if (*fusion) return cmd_fusion(o, out);
    if (*table) return cmd_table(o, out);
    if (*chars) return cmd_chars(o, out);
    if (*zhu) return cmd_zhu(o, out);
    if (*calibrate_cmd) return cmd_calibrate(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kInvalidArguments;
}

}  // namespace degfusion
