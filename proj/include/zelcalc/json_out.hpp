#pragma once

#include <string>

#include <json.hpp>

#include "zelcalc/basechange.hpp"
#include "zelcalc/distinction.hpp"
#include "zelcalc/dsl.hpp"
#include "zelcalc/involution.hpp"

namespace zelcalc {

// "NotConjSelfDual", "BothExponents" or "OnlyExponent(e)".
std::string describe(const DistinctionVerdict& v);
// "Distinguished" or "NotDistinguished(<obstruction>)".
std::string describe(const InducedVerdict& v);

nlohmann::json to_json(const Segment& s, const Universe& u);
nlohmann::json to_json(const MwTrace& trace, const Universe& u);
nlohmann::json to_json(const BaseChangeClass& c);
nlohmann::json to_json(const DistinctionVerdict& v);
// Witness indices are reported 1-based, matching factor numbering in the input.
nlohmann::json to_json(const InducedVerdict& v);
// Canonical structure of a parsed expression (no source offsets).
nlohmann::json to_json(const RepAst& r);

}  // namespace zelcalc
