#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tiltwall/dimension_one.hpp"
#include "tiltwall/wcf.hpp"

namespace tiltwall {

using Json = nlohmann::json;

// Rationals are [num, den] in lowest terms; integers beyond 64 bits are written as decimal strings.
Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const ThreefoldModel& X);
Json to_json(const KClass& v);
Json to_json(const PlanePoint& p);
Json to_json(const PlaneLine& l);
Json to_json(const QuadNum& x);
Json to_json(const Classification& c);
Json to_json(const Decomposition& d);
Json to_json(const Wall& w);
Json to_json(const std::vector<Wall>& walls);
Json to_json(const SafeLine& s);
Json to_json(const CloseWitness& w);
Json to_json(const InvariantSymbol& s);
Json to_json(const Term& t);
Json to_json(const Relation& r);
Json to_json(const Derivation& d);
Json to_json(const Dim1Wall& w);
Json to_json(const ChamberReport& r);
Json to_json(const Limits& l);

Integer integer_from_json(const Json& j);
// Accepts [num, den], an integer, or a string "p/q".
Rational rational_from_json(const Json& j);
ThreefoldModel model_from_json(const Json& j);
// Accepts {r, c, s, d} or [r, c, s, d].
KClass class_from_json(const Json& j);
PlanePoint point_from_json(const Json& j);
PlaneLine line_from_json(const Json& j);
QuadNum quadnum_from_json(const Json& j);
Classification classification_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j);
Wall wall_from_json(const Json& j);
std::vector<Wall> walls_from_json(const Json& j);
InvariantSymbol symbol_from_json(const Json& j);
Relation relation_from_json(const Json& j);
Derivation derivation_from_json(const Json& j);
Limits limits_from_json(const Json& j, Limits base = {});

Json parse_json_text(const std::string& text);
std::string read_file(const std::string& path);
// "quintic" or a path to a model JSON file.
ThreefoldModel load_model(const std::string& spec);
// Inline JSON, or a path to a JSON file.
Json load_json_arg(const std::string& arg);
// Default limits overridden by the TILTWALL_LIMITS environment variable (a JSON object).
Limits limits_from_env();

std::string dump(const Json& j);

}  // namespace tiltwall
