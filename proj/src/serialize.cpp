#include "resdist/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "resdist/error.hpp"

namespace resdist {

namespace {

std::vector<long long> integer_list(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw Error(ErrorKind::ParseError, std::string("expected an integer list under \"") + key + "\"");
  }
  std::vector<long long> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer()) {
      throw Error(ErrorKind::ParseError, std::string("non-integer entry in \"") + key + "\"");
    }
    out.push_back(v.get<long long>());
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string render(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "  " : "") << pad(row[i], widths[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace

json to_json(const Rational& r) {
  return json{{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j.at("num").is_string() ||
      !j.at("den").is_string()) {
    throw Error(ErrorKind::ParseError, "rational must be {\"num\":\"..\",\"den\":\"..\"}");
  }
  const Rational num = Rational::parse(j.at("num").get<std::string>());
  const Rational den = Rational::parse(j.at("den").get<std::string>());
  if (!num.is_integer() || !den.is_integer()) {
    throw Error(ErrorKind::ParseError, "numerator and denominator must be integers");
  }
  return num / den;
}

json to_json(const IntersectionArray& arr) {
  return json{{"b", arr.b_list()},     {"c", arr.c_list()},         {"d", arr.diameter()},
              {"N", arr.order()},      {"kappa", arr.kappa_list()}, {"a", arr.a_list()}};
}

IntersectionArray array_from_json(const json& j) {
  return IntersectionArray::validate(integer_list(j, "b"), integer_list(j, "c"));
}

IntersectionArray array_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return array_from_json(j);
}

json to_json(const FamilySpec& spec) {
  json params = json::object();
  for (const auto& [key, value] : spec.params) params[key] = value;
  return json{{"family", spec.name}, {"params", params}};
}

FamilySpec family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    throw Error(ErrorKind::ParseError, "expected {\"family\":..,\"params\":{..}}");
  }
  FamilySpec spec{j.at("family").get<std::string>(), {}};
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw Error(ErrorKind::ParseError, "params must be an object");
    for (const auto& [key, value] : j.at("params").items()) {
      if (!value.is_number_integer()) {
        throw Error(ErrorKind::ParseError, "parameter '" + key + "' must be an integer");
      }
      spec.params[key] = value.get<long long>();
    }
  }
  return spec;
}

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round_float(double x) { return std::stod(format_float(x)); }

json to_json(const ResistanceTable& table, bool exact) {
  const auto entry = [&](int m, const Rational& r) {
    json e{{"m", m}};
    if (exact) {
      e["num"] = r.numerator().get_str();
      e["den"] = r.denominator().get_str();
    } else {
      e["value"] = round_float(r.to_double());
    }
    return e;
  };
  json out{{"array", json{{"b", table.arr.b_list()}, {"c", table.arr.c_list()}}},
           {"d", table.diameter()},
           {"N", table.arr.order()},
           {"kappa", table.arr.kappa_list()}};
  json resistances = json::array();
  json increments = json::array();
  json commute = json::array();
  for (int m = 1; m <= table.diameter(); ++m) {
    resistances.push_back(entry(m, table.resistance(m)));
    commute.push_back(entry(m, table.commute_time(m)));
    if (m < table.diameter()) increments.push_back(entry(m, table.increment(m)));
  }
  out["R"] = std::move(resistances);
  out["increments"] = std::move(increments);
  out["commute"] = std::move(commute);
  return out;
}

std::string to_csv(const ResistanceTable& table, bool exact) {
  std::ostringstream os;
  os << "m,R_num,R_den,R_float,commute\n";
  for (int m = 1; m <= table.diameter(); ++m) {
    const Rational& r = table.resistance(m);
    const Rational& ct = table.commute_time(m);
    os << m << ',' << r.numerator().get_str() << ',' << r.denominator().get_str() << ','
       << format_float(r.to_double()) << ',' << (exact ? ct.str() : format_float(ct.to_double()))
       << '\n';
  }
  return os.str();
}

std::string to_text(const ResistanceTable& table, bool exact) {
  std::ostringstream head;
  head << "N = " << table.arr.order() << ", kappa = " << table.arr.valency()
       << ", d = " << table.diameter() << '\n';
  std::vector<std::vector<std::string>> rows{{"m", "kappa_m", "R", "R_float", "commute"}};
  for (int m = 1; m <= table.diameter(); ++m) {
    const Rational& r = table.resistance(m);
    const Rational& ct = table.commute_time(m);
    rows.push_back({std::to_string(m), std::to_string(table.arr.kappa(m)),
                    exact ? r.str() : format_float(r.to_double()), format_float(r.to_double()),
                    exact ? ct.str() : format_float(ct.to_double())});
  }
  return head.str() + render(rows);
}

json to_json(const SpectralData& spec) {
  return json{{"eigenvalues", spec.eigenvalues},
              {"masses", spec.masses},
              {"multiplicities", spec.multiplicities}};
}

std::string to_csv(const SpectralData& spec) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "l,eigenvalue,mass,multiplicity\n";
  for (std::size_t l = 0; l < spec.eigenvalues.size(); ++l) {
    os << l << ',' << spec.eigenvalues[l] << ',' << spec.masses[l] << ','
       << spec.multiplicities[l] << '\n';
  }
  return os.str();
}

std::string to_text(const SpectralData& spec) {
  std::vector<std::vector<std::string>> rows{{"l", "eigenvalue", "mass", "multiplicity"}};
  for (std::size_t l = 0; l < spec.eigenvalues.size(); ++l) {
    rows.push_back({std::to_string(l), format_float(spec.eigenvalues[l]),
                    format_float(spec.masses[l]), format_float(spec.multiplicities[l])});
  }
  return render(rows);
}

}  // namespace resdist
