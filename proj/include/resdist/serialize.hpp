#pragma once

#include <string>

#include <json.hpp>

#include "resdist/families.hpp"
#include "resdist/intersection_array.hpp"
#include "resdist/orthopoly.hpp"
#include "resdist/rational.hpp"
#include "resdist/resistance.hpp"

namespace resdist {

using json = nlohmann::ordered_json;

/// Rationals travel as decimal strings so no precision is lost:
/// {"num":"65","den":"51"}.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"b":[...],"c":[...],"d":..,"N":..,"kappa":[...],"a":[...]}
json to_json(const IntersectionArray& arr);
/// Reads {"b":[...],"c":[...]} and validates it; derived fields, if present,
/// are ignored.
IntersectionArray array_from_json(const json& j);
IntersectionArray array_from_json_text(const std::string& text);

/// {"family":..,"params":{..}}
json to_json(const FamilySpec& spec);
FamilySpec family_from_json(const json& j);

/// 15 significant digits.
std::string format_float(double x);
/// x rounded to 15 significant digits, so that JSON output stays short.
double round_float(double x);

json to_json(const ResistanceTable& table, bool exact);
std::string to_csv(const ResistanceTable& table, bool exact);
std::string to_text(const ResistanceTable& table, bool exact);

/// Floats at full double precision.
json to_json(const SpectralData& spec);
std::string to_csv(const SpectralData& spec);
std::string to_text(const SpectralData& spec);

}  // namespace resdist
