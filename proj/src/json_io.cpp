#include "species/json_io.hpp"

#include "species/errors.hpp"

namespace species {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw DomainError("json: expected a rational string");
  return parse_rational(j.get<std::string>());
}

}  // namespace

Json to_json(const Scalar& s) { return {{"re", rational_string(s.re())}, {"im", rational_string(s.im())}}; }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return Scalar(rational_from_json(j));
  const Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
  return Scalar(rational_from_json(field(j, "re")), im);
}

Json to_json(const LabelSet& s) { return Json(s.elements()); }

LabelSet label_set_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("json: expected an array of labels");
  try {
    return LabelSet(j.get<std::vector<Label>>());
  } catch (const Json::exception& e) {
    throw DomainError(std::string("json: bad label set: ") + e.what());
  }
}

Json to_json(const Composition& f) {
  Json out = Json::array();
  for (const auto& lump : f) out.push_back(to_json(lump));
  return out;
}

Composition composition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("json: expected an array of lumps");
  std::vector<LabelSet> lumps;
  for (const auto& lump : j) lumps.push_back(label_set_from_json(lump));
  return Composition(std::move(lumps));
}

Json to_json(const SigmaElem& a) {
  Json terms = Json::array();
  for (const auto& [f, c] : a) terms.push_back({{"comp", to_json(f)}, {"coeff", to_json(c)}});
  return {{"ground", to_json(a.ground())}, {"basis", to_string(a.basis())}, {"terms", terms}};
}

SigmaElem sigma_from_json(const Json& j) {
  const std::string basis = field(j, "basis").get<std::string>();
  if (basis != "H" && basis != "Q") throw DomainError("json: basis must be H or Q");
  SigmaElem out(label_set_from_json(field(j, "ground")), basis == "H" ? Basis::H : Basis::Q);
  for (const auto& term : field(j, "terms")) {
    out.add_term(composition_from_json(field(term, "comp")), scalar_from_json(field(term, "coeff")));
  }
  return out;
}

Json to_json(const Cell& c) {
  Json positive = Json::array();
  for (const auto& s : c.positive_sides()) positive.push_back(to_json(s));
  return {{"ground", to_json(c.ground())}, {"positive", positive}};
}

Cell cell_from_json(const Json& j) {
  std::vector<LabelSet> positive;
  for (const auto& s : field(j, "positive")) positive.push_back(label_set_from_json(s));
  return Cell::from_positive(label_set_from_json(field(j, "ground")), positive);
}

Json to_json(const std::vector<Rational>& witness) {
  Json out = Json::array();
  for (const auto& q : witness) out.push_back(rational_string(q));
  return out;
}

Json to_json(const Laurent& l) {
  Json out = Json::array();
  for (const auto& [p, c] : l.terms()) out.push_back({{"pow", p}, {"coeff", to_json(c)}});
  return out;
}

Laurent laurent_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("json: expected an hbar term list");
  Laurent out;
  for (const auto& term : j) out += Laurent::monomial(field(term, "pow").get<int>(), scalar_from_json(field(term, "coeff")));
  return out;
}

Json to_json(const TruncSeries& ts) {
  Json terms = Json::array();
  for (const auto& [m, v] : ts.terms()) {
    for (const auto& [word, c] : v) {
      terms.push_back({{"g", m.first}, {"j", m.second}, {"hbar", to_json(c)}, {"value", Json(word)}});
    }
  }
  return {{"order", ts.order()}, {"terms", terms}};
}

TruncSeries trunc_series_from_json(const Json& j, bool commutative) {
  TruncSeries out(field(j, "order").get<unsigned>(), commutative);
  for (const auto& term : field(j, "terms")) {
    const auto word = field(term, "value").get<Word>();
    out.add(field(term, "g").get<unsigned>(), field(term, "j").get<unsigned>(),
            word_of(word, laurent_from_json(field(term, "hbar"))));
  }
  return out;
}

Json to_json(const Model& m) {
  Json observables = Json::array();
  for (const auto& o : m.observables()) observables.push_back({{"id", o.id}, {"time", rational_string(o.time)}});
  Json out{{"observables", observables}};
  if (!m.interaction().empty()) out["interaction"] = m.interaction();
  return out;
}

Model model_from_json(const Json& j) {
  std::vector<TimedObservable> observables;
  for (const auto& o : field(j, "observables")) {
    observables.push_back({field(o, "id").get<std::string>(), rational_from_json(field(o, "time"))});
  }
  std::string interaction = j.contains("interaction") ? j.at("interaction").get<std::string>() : "";
  return Model(std::move(observables), std::move(interaction));
}

}  // namespace species
