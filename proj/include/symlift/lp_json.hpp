#pragma once

#include <string>

#include <json.hpp>

#include "symlift/lp_model.hpp"

namespace symlift {

using Json = nlohmann::ordered_json;

// Rationals are written as strings; integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const VarId& v);
VarId var_from_json(const Json& j);

Json to_json(const LinearConstraint& c);
LinearConstraint constraint_from_json(const Json& j);

Json to_json(const LinearProgram& lp);
LinearProgram lp_from_json(const Json& j);

Json to_json(const Assignment& a);
// Accepts [{"var": VarId, "value": r}, ...].
Assignment assignment_from_json(const Json& j);

// Reads and parses a JSON document; throws ParseError with the path on failure.
Json read_json_file(const std::string& path);

}  // namespace symlift
