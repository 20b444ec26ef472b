#pragma once

#include "reklab/connectivity.hpp"
#include "reklab/generators.hpp"
#include "reklab/invariants.hpp"
#include "reklab/theorems.hpp"

#include <json.hpp>

namespace reklab {

// JSON views with stable field order (ordered_json keeps insertion order),
// so identical inputs serialize byte-identically. +infinity renders as the
// string "infinity", undefined parameters as "undefined".

using OrderedJson = nlohmann::ordered_json;

OrderedJson json_of(const CutResult& cut);
OrderedJson json_of(const RestrictedCut& rc);
OrderedJson json_of(const DegreeProfile& profile);
OrderedJson json_of(const TheoremReport& report);
OrderedJson json_of(const ClassifierVerdict& verdict);
OrderedJson json_of(const gen::GeneratorSpec& spec);

gen::GeneratorSpec generator_spec_from_json(const nlohmann::json& j);

} // namespace reklab
