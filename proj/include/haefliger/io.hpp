#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "haefliger/diagram.hpp"
#include "haefliger/linking.hpp"
#include "haefliger/rational.hpp"

namespace haefliger::io {

using json = nlohmann::ordered_json;

/// {"k": int, "m": int, "lk": [{"i","ei","j","ej","value"}...], "writhe": [{"i","e","value"}...]}
/// Any restated unordered key is rejected (AsymmetricEntry when the values
/// conflict, ParseError otherwise).
CrossingDiagram diagram_from_json(const json& j);
json diagram_to_json(const CrossingDiagram& d);

/// {"components": [[[x,y,z], ...], ...]}
std::vector<PolyCurve> curves_from_json(const json& j);
json curves_to_json(const std::vector<PolyCurve>& curves);

/// {"num": int, "den": int}
json rational_to_json(const Rational& r);

/// Reads and parses a JSON file; throws ParseError.
json read_json_file(const std::string& path);

}  // namespace haefliger::io
