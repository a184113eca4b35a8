#pragma once

#include <vector>

#include "json.hpp"
#include "species/scalar.hpp"
#include "species/series.hpp"
#include "species/sigma.hpp"
#include "species/toyqft.hpp"
#include "species/zie.hpp"

namespace species {

using Json = nlohmann::json;

// {"re": "p/q", "im": "p/q"}
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const LabelSet& s);
LabelSet label_set_from_json(const Json& j);

// [[1,2],[3]]
Json to_json(const Composition& f);
Composition composition_from_json(const Json& j);

// {"ground": [...], "basis": "H", "terms": [{"comp": ..., "coeff": ...}]}
Json to_json(const SigmaElem& a);
SigmaElem sigma_from_json(const Json& j);

// {"ground": [...], "positive": [[...], ...]}
Json to_json(const Cell& c);
Cell cell_from_json(const Json& j);

Json to_json(const std::vector<Rational>& witness);

// [{"pow": e, "coeff": scalar}]
Json to_json(const Laurent& l);
Laurent laurent_from_json(const Json& j);

// {"order": k, "terms": [{"g", "j", "hbar", "value": [ids]}]}
Json to_json(const TruncSeries& ts);
TruncSeries trunc_series_from_json(const Json& j, bool commutative = false);

// {"observables": [{"id": "a", "time": "0"}], "interaction": "s"}
Json to_json(const Model& m);
Model model_from_json(const Json& j);

}  // namespace species
