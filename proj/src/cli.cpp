#include "resdist/cli.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "resdist/error.hpp"
#include "resdist/explicit_graph.hpp"
#include "resdist/orthopoly.hpp"
#include "resdist/resistance.hpp"
#include "resdist/serialize.hpp"

namespace resdist::cli {

namespace {

constexpr double kSpectralTolerance = 1e-9;

IntersectionArray input_array(const CliRequest& req) {
  if (req.family.has_value() == req.array_json.has_value()) {
    throw Error(ErrorKind::ParseError, "give exactly one of --family or --array");
  }
  if (req.family) return family_array(*req.family);
  return array_from_json_text(*req.array_json);
}

json source_json(const CliRequest& req, const IntersectionArray& arr) {
  json out;
  if (req.family) out = to_json(*req.family);
  out["array"] = json{{"b", arr.b_list()}, {"c", arr.c_list()}};
  return out;
}

int resist(const CliRequest& req, std::ostream& out) {
  const ResistanceTable table = resistance_table(input_array(req));
  switch (req.format) {
    case Format::Json: out << to_json(table, req.exact).dump(2) << '\n'; break;
    case Format::Csv: out << to_csv(table, req.exact); break;
    case Format::Table: out << to_text(table, req.exact); break;
  }
  return kExitOk;
}

int spectral(const CliRequest& req, std::ostream& out) {
  const SpectralData spec = spectral_data(input_array(req));
  switch (req.format) {
    case Format::Json: out << to_json(spec).dump(2) << '\n'; break;
    case Format::Csv: out << to_csv(spec); break;
    case Format::Table: out << to_text(spec); break;
  }
  return kExitOk;
}

// Families without a vertex-level construction are
// checked through the spectral sums instead.
json spectral_report(const CliRequest& req, const IntersectionArray& arr, bool& ok) {
  const ResistanceTable table = resistance_table(arr);
  const SpectralData spec = spectral_data(arr);
  json mismatches = json::array();
  for (int m = 1; m <= arr.diameter(); ++m) {
    const double via_spectrum = resistance_spectral(arr, spec, m);
    const double via_recursion = table.resistance(m).to_double();
    if (!(std::abs(via_spectrum - via_recursion) < kSpectralTolerance)) {
      mismatches.push_back("stratum " + std::to_string(m) + ": spectral " +
                           format_float(via_spectrum) + " vs recursion " +
                           table.resistance(m).str());
    }
  }
  ok = mismatches.empty();
  json report = source_json(req, arr);
  report["method"] = "spectral";
  report["strata_sizes"] = arr.kappa_list();
  report["oracle_vs_recursion"] = ok ? json("spectral-match") : mismatches;
  return report;
}

// With both --family and --array, the array is a claim checked against the
// explicit graph of the family.
int verify(const CliRequest& req, std::ostream& out) {
  const bool claimed = req.family && req.array_json;
  const IntersectionArray arr =
      claimed ? array_from_json_text(*req.array_json) : input_array(req);
  bool ok = false;
  json report;
  bool explicit_done = false;
  if (req.family) {
    try {
      const OracleReport r = cross_check(*req.family);
      report = source_json(req, arr);
      report["method"] = "explicit-oracle";
      report["strata_sizes"] = r.strata_sizes;
      report["pairs_checked"] = r.pairs_checked;
      std::vector<std::string> mismatches = r.mismatches;
      if (claimed && r.recovered && !(*r.recovered == arr)) {
        mismatches.push_back("explicit graph has array " + to_json(*r.recovered).dump() +
                             ", not the claimed one");
      }
      report["oracle_vs_recursion"] = mismatches.empty() ? json("exact-match") : json(mismatches);
      ok = mismatches.empty();
      explicit_done = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge && e.kind() != ErrorKind::ParamOutOfDomain) throw;
    }
  }
  if (!explicit_done) report = spectral_report(req, arr, ok);

  if (req.format == Format::Json) {
    out << report.dump(2) << '\n';
  } else {
    out << "family: " << (req.family ? req.family->label() : std::string("(array)")) << '\n'
        << "method: " << report["method"].get<std::string>() << '\n'
        << "strata_sizes: " << report["strata_sizes"].dump() << '\n'
        << "oracle_vs_recursion: " << report["oracle_vs_recursion"].dump() << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

int walk(const CliRequest& req, std::ostream& out) {
  if (!req.family || req.array_json) {
    throw Error(ErrorKind::ParseError, "walk needs --family with an explicit construction");
  }
  const ExplicitGraph g = build_graph(*req.family);
  int source = 0;
  int target = g.neighbors(0).front();
  if (req.source) std::tie(source, target) = *req.source;
  if (source < 0 || target < 0 || source >= g.size() || target >= g.size() || source == target) {
    throw Error(ErrorKind::ParamOutOfDomain, "--source needs two distinct vertex indices in [0, " +
                                                 std::to_string(g.size()) + ")");
  }
  const IntersectionArray arr = family_array(*req.family);
  const int stratum = stratify(g, source).distance()[static_cast<std::size_t>(target)];
  const Rational analytic = commute_time(arr, stratum);
  const CommuteEstimate est = mc_commute_time(g, source, target, req.walks, req.seed);
  const double deviation = std::abs(est.mean - analytic.to_double());
  const bool within = deviation <= 3.0 * est.std_error;

  if (req.format == Format::Json) {
    json report = source_json(req, arr);
    report["source"] = source;
    report["target"] = target;
    report["stratum"] = stratum;
    report["walks"] = est.walks;
    report["seed"] = req.seed;
    report["mean"] = round_float(est.mean);
    report["std_error"] = round_float(est.std_error);
    report["analytic"] = req.exact ? to_json(analytic) : json(round_float(analytic.to_double()));
    report["within_3_std_error"] = within;
    out << report.dump(2) << '\n';
  } else if (req.format == Format::Csv) {
    out << "source,target,stratum,walks,seed,mean,std_error,analytic\n"
        << source << ',' << target << ',' << stratum << ',' << est.walks << ',' << req.seed << ','
        << format_float(est.mean) << ',' << format_float(est.std_error) << ','
        << (req.exact ? analytic.str() : format_float(analytic.to_double())) << '\n';
  } else {
    out << "walk " << g.label(source) << " -> " << g.label(target) << " (stratum " << stratum
        << "), " << est.walks << " round trips, seed " << req.seed << '\n'
        << "monte carlo: " << format_float(est.mean) << " +/- " << format_float(est.std_error)
        << '\n'
        << "analytic N*kappa*R: "
        << (req.exact ? analytic.str() : format_float(analytic.to_double())) << '\n'
        << "within 3 std errors: " << (within ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

int families(const CliRequest& req, std::ostream& out) {
  const auto templates = list_families();
  if (req.format == Format::Json) {
    json list = json::array();
    for (const auto& t : templates) {
      json e{{"name", t.name}, {"params", t.params}, {"domain", t.domain}, {"array", t.array_formula}};
      if (t.fixed_order) e["N"] = *t.fixed_order;
      list.push_back(std::move(e));
    }
    out << list.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& t : templates) {
    std::string params;
    for (const auto& p : t.params) params += (params.empty() ? "" : ",") + p;
    out << t.name << '(' << params << ")  domain: " << t.domain << "  array: " << t.array_formula;
    if (t.fixed_order) out << "  N=" << *t.fixed_order;
    out << '\n';
  }
  return kExitOk;
}

std::pair<int, int> parse_source(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    const int ia = std::stoi(a, &used_a);
    const int ib = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {ia, ib};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "--source expects <alpha>/<beta>, got '" + text + "'");
  }
}

}  // namespace

int run(const CliRequest& request, std::ostream& out, std::ostream& err) {
  try {
    switch (request.command) {
      case Command::Resist: return resist(request, out);
      case Command::Spectral: return spectral(request, out);
      case Command::Verify: return verify(request, out);
      case Command::Walk: return walk(request, out);
      case Command::Families: return families(request, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resistance distances on distance-regular networks from intersection arrays"};
  app.require_subcommand(1);

  CliRequest req;
  std::string family;
  std::vector<std::string> params;
  std::string array;
  std::string format = "table";
  std::string source;

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("--family", family, "named family (see `families`)");
    sub->add_option("--param", params, "family parameter key=value (repeatable)");
    sub->add_option("--array", array, R"(raw array as JSON, e.g. {"b":[3,2,1],"c":[1,2,3]})");
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_flag("--exact", req.exact, "render rationals exactly");
  };

  CLI::App* resist_cmd = app.add_subcommand("resist", "per-stratum resistance table");
  add_input(resist_cmd);
  add_format(resist_cmd);
  CLI::App* spectral_cmd = app.add_subcommand("spectral", "spectral distribution of the network");
  add_input(spectral_cmd);
  add_format(spectral_cmd);
  CLI::App* verify_cmd = app.add_subcommand("verify", "cross-check the recursion");
  add_input(verify_cmd);
  add_format(verify_cmd);
  CLI::App* walk_cmd = app.add_subcommand("walk", "Monte Carlo commute time vs N*kappa*R");
  add_input(walk_cmd);
  add_format(walk_cmd);
  walk_cmd->add_option("--seed", req.seed, "random seed");
  walk_cmd->add_option("--walks", req.walks, "number of round trips")->check(CLI::PositiveNumber);
  walk_cmd->add_option("--source", source, "vertex pair <alpha>/<beta> (default: 0 and a neighbour)");
  CLI::App* families_cmd = app.add_subcommand("families", "list supported families");
  add_format(families_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (*resist_cmd) req.command = Command::Resist;
  if (*spectral_cmd) req.command = Command::Spectral;
  if (*verify_cmd) req.command = Command::Verify;
  if (*walk_cmd) req.command = Command::Walk;
  if (*families_cmd) req.command = Command::Families;

  req.format = format == "json" ? Format::Json : (format == "csv" ? Format::Csv : Format::Table);
  try {
    if (!family.empty()) {
      FamilySpec spec{family, {}};
      for (const auto& p : params) add_param(spec, p);
      req.family = std::move(spec);
    } else if (!params.empty()) {
      throw Error(ErrorKind::ParseError, "--param requires --family");
    }
    if (!array.empty()) req.array_json = array;
    if (!source.empty()) req.source = parse_source(source);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return run(req, out, err);
}

}  // namespace resdist::cli
