#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resdist/intersection_array.hpp"
#include "resdist/rational.hpp"

namespace resdist {

/// A named family of distance-regular networks plus its integer parameters,
/// e.g. {"johnson", {{"n", 6}, {"d", 3}}}.
struct FamilySpec {
  std::string name;
  std::map<std::string, long long> params;

  /// "johnson(d=3,n=6)"
  std::string label() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Catalog entry describing a family generator.
struct FamilyTemplate {
  std::string name;
  std::vector<std::string> params;
  std::string domain;         // human-readable parameter constraints
  std::string array_formula;  // how b_i and c_i are generated
  std::optional<long long> fixed_order;
};

/// Throws ParamOutOfDomain for an unknown family, missing, extra or
/// out-of-range parameters, and ValidationFailed if the generated array does
/// not validate.
IntersectionArray family_array(const FamilySpec& spec);

/// l(N-l)/N, the resistance at distance l on the even cycle C_N.
Rational cycle_closed_form(long long n, long long l);

std::vector<FamilyTemplate> list_families();

/// Concrete instances covering every family; the test matrix for the
/// catalog-wide properties.
std::vector<FamilySpec> catalog();

/// Parses "key=value" into the spec's parameter map.
void add_param(FamilySpec& spec, const std::string& assignment);

}  // namespace resdist
