#include "degfusion/json_io.hpp"

#include <stdexcept>

namespace degfusion {

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rationals are encoded as strings");
  return parse_rational(j.get<std::string>());
}

Json to_json(const Word& w) {
  Json out = Json::array();
  for (const auto& m : w) out.push_back(m.to_string());
  return out;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("words are encoded as arrays of mode strings");
  Word w;
  for (const auto& m : j) w.push_back(parse_mode(m.get<std::string>()));
  return w;
}

Json to_json(const VermaVector& v) {
  Json entries = Json::array();
  for (const auto& [w, c] : v.entries) entries.push_back({{"word", to_json(w)}, {"coeff", to_json(c)}});
  return {{"flavor", to_string(v.flavor)},
          {"c", to_json(v.c)},
          {"h", to_json(v.h)},
          {"level", to_string(v.level)},
          {"entries", entries}};
}

VermaVector verma_vector_from_json(const Json& j) {
  VermaVector v;
  v.flavor = parse_flavor(j.at("flavor").get<std::string>());
  v.c = rational_from_json(j.at("c"));
  v.h = rational_from_json(j.at("h"));
  v.level = parse_half_int(j.at("level").get<std::string>());
  for (const auto& e : j.at("entries")) {
    const Word w = word_from_json(e.at("word"));
    if (!is_canonical(w)) throw std::invalid_argument("entry word is not canonical: " + to_string(w));
    if (level(w) != v.level) throw std::invalid_argument("entry word has the wrong level: " + to_string(w));
    const Rational c = rational_from_json(e.at("coeff"));
    if (c != 0) v.entries[w] += c;
  }
  return v;
}

Json to_json(const Polynomial1& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Polynomial2& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"x", e.first}, {"y", e.second}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const ZhuImage& z) {
  return {{"flavor", to_string(z.flavor)}, {"even", to_json(z.even)}, {"odd", to_json(z.odd)}};
}

Json to_json(const QSeries& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms()) out.push_back(Json::array({to_string(e), c.get_str()}));
  return out;
}

Json to_json(const CalibrationReport& r) {
  Json maps = Json::array();
  for (const auto& e : r.maps) {
    Json m{{"name", e.name}, {"match", e.match}};
    if (e.ratio) m["ratio"] = to_json(*e.ratio);
    maps.push_back(m);
  }
  return {{"q", r.q}, {"flavor", to_string(r.flavor)}, {"maps", maps}};
}

Json to_json(const std::vector<Channel>& channels, Flavor flavor) {
  Json out = Json::array();
  for (const auto& ch : channels) {
    Json c{{"s", ch.label}};
    if (flavor == Flavor::NS) c["parity"] = to_string(ch.parity);
    out.push_back(c);
  }
  return out;
}

Json to_json(const FusionTable& t) {
  Json products = Json::array();
  for (const auto& [ab, channels] : t.products)
    products.push_back({{"a", ab.first}, {"b", ab.second}, {"channels", to_json(channels, t.flavor)}});
  return {{"flavor", to_string(t.flavor)}, {"bound", t.bound}, {"products", products}};
}

Json to_json(const RingReport& r) {
  return {{"commutative", r.commutative},
          {"associative", r.associative},
          {"unital", r.unital},
          {"triples_checked", r.triples_checked},
          {"witnesses", r.witnesses}};
}

Json to_json(const RepLabel& l) { return {{"algebra", to_string(l.algebra)}, {"j", to_string(l.j)}}; }

RepLabel rep_label_from_json(const Json& j) {
  const RepAlgebra a = parse_rep_algebra(j.at("algebra").get<std::string>());
  const HalfInt v = parse_half_int(j.at("j").get<std::string>());
  return a == RepAlgebra::SL2 ? RepLabel::sl2(v.is_integer() ? v.twice / 2 : -1) : RepLabel::osp(v);
}

Json to_json(const RepMultiset& m) {
  Json out = Json::array();
  for (const auto& [label, mult] : m) out.push_back({{"label", to_json(label)}, {"multiplicity", mult}});
  return out;
}

Json to_json(const MatrixRealization& m, double tolerance) {
  Json gens = Json::object();
  for (const auto& [name, mat] : m.generators) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < mat.n; ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < mat.n; ++c) row.push_back(mat(r, c));
      rows.push_back(row);
    }
    gens[name] = rows;
  }
  Json relations = Json::array();
  for (const auto& rel : relation_residuals(m))
    relations.push_back({{"relation", rel.relation},
                         {"residual", rel.residual},
                         {"printed", rel.printed},
                         {"consistent", rel.consistent},
                         {"holds", rel.residual < tolerance}});
  return {{"label", to_json(m.label)}, {"tolerance", tolerance}, {"generators", gens}, {"relations", relations}};
}

}  // namespace degfusion
