#pragma once

// Universe files:
//   {"lines":[{"id":"one","deg":1,"conj_dual":"self","eta0":1,"dist_a":0},
//             {"id":"pi3","deg":3,"conj_dual":{"partner":"pi3b"}}, ...]}
// eta0 and dist_a are present exactly on "self" lines.

#include <string>
#include <string_view>

#include <json.hpp>

#include "zelcalc/universe.hpp"

namespace zelcalc {

// Throws SchemaError (with a JSON pointer) or Error(InconsistentPartners).
Universe parse_universe(std::string_view json_text);
Universe universe_from_json(const nlohmann::json& j);

nlohmann::json universe_to_json(const Universe& u);

// Reads and parses a universe file.
Universe load_universe(const std::string& path);

}  // namespace zelcalc
