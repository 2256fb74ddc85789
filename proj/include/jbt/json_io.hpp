#pragma once

#include "jbt/preserver.hpp"

#include "json.hpp"

#include <string>

namespace jbt {

// Stable-key-order JSON throughout so reports diff cleanly.
using json = nlohmann::ordered_json;

// Complex scalars travel as [re, im]; a bare number is accepted on input.
json complex_to_json(const cxd& z);
cxd complex_from_json(const json& j);

json factor_to_json(const FactorDescriptor& f);
FactorDescriptor factor_from_json(const json& j);

// {"factor": {...}, "data": rows of [re,im] cells (flat list for spin)}
json element_to_json(const Element& x);
Element element_from_json(const json& j);

// {"parts": [element, ...]}; a bare element parses as a one-part sum.
json sum_to_json(const SumElement& x);
SumElement sum_from_json(const json& j);

/// Map recipes:
///   {"recipe":"linear"|"conjlinear", "factor":F, "op":..., ...}
///     ops: identity, transpose, unitary (seed), scale (value), peirce-twist,
///          real-stretch, first-line-conjugation, conjugation,
///          conjugate-unitary (seed), matrix (matrix: 2d x 2d rows)
///   {"recipe":"gauge", "factor":F, "f":"identity"|"conjugation"|"inverse-or-zero"}
///   {"recipe":"perturb", "base":recipe, "epsilon":e, "direction":element}
///   {"recipe":"sum", "sigma":[...], "parts":[recipe, ...]}
///   {"recipe":"compose", "maps":[recipe, ...]}
///   {"recipe":"catalogue", "name":..., "seed":s} (built-in catalogues)
/// default_seed feeds recipes that need randomness but carry no "seed".
PreserverMap map_from_json(const json& j, std::uint64_t default_seed);

json witness_to_json(const WitnessTriple& w);
json trial_report_to_json(const TrialReport& r);
json consequence_to_json(const ConsequenceResult& r);
json classify_to_json(const ClassifyReport& r);
json factor_match_to_json(const FactorMatch& m);
json rank_one_to_json(const RankOneReport& r);
json gauge_properties_to_json(const GaugeProperties& p);

json load_json_file(const std::string& path);

}  // namespace jbt
