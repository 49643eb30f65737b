#include "resdist/families.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include "resdist/error.hpp"

namespace resdist {

namespace {

using Params = std::map<std::string, long long>;

[[noreturn]] void out_of_domain(const std::string& family, const std::string& why) {
  throw Error(ErrorKind::ParamOutOfDomain, family + ": " + why);
}

void expect_params(const FamilySpec& spec, const std::set<std::string>& names) {
  for (const auto& name : names) {
    if (!spec.params.contains(name)) out_of_domain(spec.name, "missing parameter '" + name + "'");
  }
  for (const auto& [name, value] : spec.params) {
    if (!names.contains(name)) out_of_domain(spec.name, "unexpected parameter '" + name + "'");
  }
}

long long checked_mul(long long x, long long y) {
  long long out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw Error(ErrorKind::Overflow, "parameter too large");
  return out;
}

long long ipow(long long base, long long exp) {
  long long out = 1;
  for (long long i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

// Gaussian binomial [j;1] = 1 + q + ... + q^{j-1}; j for q = 1.
long long gauss1(long long j, long long q) {
  long long out = 0;
  long long term = 1;
  for (long long i = 0; i < j; ++i) {
    out += term;
    term = checked_mul(term, q);
  }
  return out;
}

bool is_prime_power(long long q) {
  if (q < 2) return false;
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;
}

struct Arrays {
  std::vector<long long> b;
  std::vector<long long> c;
};

Arrays cycle(const FamilySpec& s) {
  expect_params(s, {"N"});
  const long long n = s.params.at("N");
  if (n < 3) out_of_domain(s.name, "N must be >= 3");
  if (n > 1'000'000) out_of_domain(s.name, "N must be <= 10^6");
  const long long m = n / 2;
  Arrays out;
  out.b.assign(static_cast<std::size_t>(m), 1);
  out.c.assign(static_cast<std::size_t>(m), 1);
  out.b.front() = 2;
  if (n % 2 == 0) out.c.back() = 2;
  return out;
}

Arrays hypercube(const FamilySpec& s) {
  expect_params(s, {"d"});
  const long long d = s.params.at("d");
  if (d < 1 || d > 62) out_of_domain(s.name, "d must be in 1..62");
  Arrays out;
  for (long long i = 0; i < d; ++i) out.b.push_back(d - i);
  for (long long i = 1; i <= d; ++i) out.c.push_back(i);
  return out;
}

Arrays johnson(const FamilySpec& s) {
  expect_params(s, {"n", "d"});
  const long long n = s.params.at("n");
  const long long d = s.params.at("d");
  if (n < 2) out_of_domain(s.name, "n must be >= 2");
  if (d < 1 || 2 * d > n) out_of_domain(s.name, "d must satisfy 1 <= d <= n/2");
  Arrays out;
  for (long long i = 0; i < d; ++i) out.b.push_back(checked_mul(d - i, n - d - i));
  for (long long i = 1; i <= d; ++i) out.c.push_back(i * i);
  return out;
}

Arrays complete(const FamilySpec& s) {
  expect_params(s, {"N"});
  const long long n = s.params.at("N");
  if (n < 2) out_of_domain(s.name, "N must be >= 2");
  return {{n - 1}, {1}};
}

Arrays gen_octagon(const FamilySpec& s) {
  expect_params(s, {"s"});
  const long long v = s.params.at("s");
  if (v < 2 || v > 4) out_of_domain(s.name, "s must be one of 2, 3, 4");
  return {{2 * v, v, v, v}, {1, 1, 1, 2}};
}

Arrays incidence_pg(const FamilySpec& s) {
  expect_params(s, {"l"});
  const long long l = s.params.at("l");
  if (l != 4 && l != 5 && l != 7 && l != 8) out_of_domain(s.name, "l must be one of 4, 5, 7, 8");
  return {{l, l - 1, l - 1, 1}, {1, 1, l - 1, l}};
}

Arrays hadamard(const FamilySpec& s) {
  expect_params(s, {"gamma"});
  const long long g = s.params.at("gamma");
  if (g < 1 || g > 1'000'000) out_of_domain(s.name, "gamma must be in 1..10^6");
  return {{4 * g, 4 * g - 1, 2 * g, 1}, {1, 2 * g, 4 * g - 1, 4 * g}};
}

Arrays classical(const FamilySpec& s) {
  expect_params(s, {"d", "q", "alpha", "beta"});
  const long long d = s.params.at("d");
  const long long q = s.params.at("q");
  const long long alpha = s.params.at("alpha");
  const long long beta = s.params.at("beta");
  if (d < 1 || d > 62) out_of_domain(s.name, "d must be in 1..62");
  Arrays out;
  const long long top = gauss1(d, q);
  for (long long i = 0; i < d; ++i) {
    const long long gi = gauss1(i, q);
    out.b.push_back(checked_mul(top - gi, beta - checked_mul(alpha, gi)));
  }
  for (long long i = 1; i <= d; ++i) {
    out.c.push_back(checked_mul(gauss1(i, q), 1 + checked_mul(alpha, gauss1(i - 1, q))));
  }
  for (std::size_t i = 0; i < out.b.size(); ++i) {
    if (out.b[i] <= 0 || out.c[i] <= 0) {
      out_of_domain(s.name, "parameters give a non-positive intersection number");
    }
  }
  return out;
}

Arrays dual_polar_b(const FamilySpec& s) {
  expect_params(s, {"q", "d"});
  const long long q = s.params.at("q");
  const long long d = s.params.at("d");
  if (!is_prime_power(q)) out_of_domain(s.name, "q must be a prime power");
  if (d < 3 || d > 30) out_of_domain(s.name, "d must be in 3..30");
  Arrays out;
  for (long long i = 0; i < d; ++i) {
    out.b.push_back(checked_mul(ipow(q, i + 1), ipow(q, d - i) - 1) / (q - 1));
  }
  for (long long i = 1; i <= d; ++i) out.c.push_back((ipow(q, i) - 1) / (q - 1));
  return out;
}

Arrays gen_dodecagon(const FamilySpec& s) {
  expect_params(s, {"s"});
  const long long v = s.params.at("s");
  if (v < 1 || v > 1000) out_of_domain(s.name, "s must be in 1..1000");
  return {{2 * v, v, v, v, v, v}, {1, 1, 1, 1, 1, 2}};
}

Arrays family7(const FamilySpec& s) {
  expect_params(s, {"gamma"});
  const long long g = s.params.at("gamma");
  if (g < 1 || g > 1000) out_of_domain(s.name, "gamma must be in 1..1000");
  const long long l = g * (g * g + 3 * g + 1);
  const long long c = g * (g + 1);
  return {{l, l - 1, l - c, c, 1}, {1, c, l - c, l - 1, l}};
}

Arrays fixed(const FamilySpec& s, Arrays arrays) {
  expect_params(s, {});
  return arrays;
}

struct Generator {
  FamilyTemplate info;
  std::function<Arrays(const FamilySpec&)> make;
};

const std::vector<Generator>& generators() {
  static const std::vector<Generator> table = {
      {{"cycle", {"N"}, "N >= 3", "even N=2m: {2,1,...,1;1,...,1,2}; odd N=2m+1: {2,1,...,1;1,...,1}",
        std::nullopt},
       cycle},
      {{"hypercube", {"d"}, "d >= 1", "b_i = d-i, c_i = i", std::nullopt}, hypercube},
      {{"johnson", {"n", "d"}, "n >= 2, 1 <= d <= n/2", "b_i = (d-i)(n-d-i), c_i = i^2",
        std::nullopt},
       johnson},
      {{"complete", {"N"}, "N >= 2", "{N-1; 1}", std::nullopt}, complete},
      {{"gen_octagon", {"s"}, "s in {2, 3, 4}", "{2s,s,s,s; 1,1,1,2}", std::nullopt},
       gen_octagon},
      {{"incidence_pg", {"l"}, "l in {4, 5, 7, 8}", "{l,l-1,l-1,1; 1,1,l-1,l}", std::nullopt},
       incidence_pg},
      {{"hadamard", {"gamma"}, "gamma >= 1",
        "{4g,4g-1,2g,1; 1,2g,4g-1,4g}", std::nullopt},
       hadamard},
      {{"classical", {"d", "q", "alpha", "beta"}, "all resulting b_i, c_i positive integers",
        "classical parameters: c_i = [i](1 + alpha [i-1]), b_i = ([d] - [i])(beta - alpha [i]), "
        "[j] = 1 + q + ... + q^(j-1)",
        std::nullopt},
       classical},
      {{"dual_polar_B", {"q", "d"}, "q a prime power, d >= 3",
        "b_i = q^(i+1)(q^(d-i) - 1)/(q - 1), c_i = (q^i - 1)/(q - 1)", std::nullopt},
       dual_polar_b},
      {{"m22", {}, "none", "{7,6,4,4; 1,1,1,6}", 330},
       [](const FamilySpec& s) { return fixed(s, {{7, 6, 4, 4}, {1, 1, 1, 6}}); }},
      {{"gen_dodecagon", {"s"}, "s >= 1", "{2s,s,s,s,s,s; 1,1,1,1,1,2}", std::nullopt},
       gen_dodecagon},
      {{"family7", {"gamma"}, "gamma >= 1",
        "{l,l-1,l-c,c,1; 1,c,l-c,l-1,l} with l = g(g^2+3g+1), c = g(g+1)", std::nullopt},
       family7},
      {{"biggs_smith", {}, "none", "{3,2,2,2,1,1,1; 1,1,1,1,1,1,3}", 102},
       [](const FamilySpec& s) {
         return fixed(s, {{3, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 3}});
       }},
      {{"foster", {}, "none", "{3,2,2,2,2,1,1,1; 1,1,1,1,2,2,2,3}", 90},
       [](const FamilySpec& s) {
         return fixed(s, {{3, 2, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 2, 2, 2, 3}});
       }},
  };
  return table;
}

}  // namespace

std::string FamilySpec::label() const {
  std::ostringstream os;
  os << name;
  if (!params.empty()) {
    os << '(';
    bool first = true;
    for (const auto& [key, value] : params) {
      if (!first) os << ',';
      os << key << '=' << value;
      first = false;
    }
    os << ')';
  }
  return os.str();
}

IntersectionArray family_array(const FamilySpec& spec) {
  const auto& gens = generators();
  const auto it = std::find_if(gens.begin(), gens.end(),
                               [&](const Generator& g) { return g.info.name == spec.name; });
  if (it == gens.end()) out_of_domain(spec.name, "unknown family");
  const Arrays arrays = it->make(spec);
  try {
    return IntersectionArray::validate(arrays.b, arrays.c);
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationFailed, spec.label() + " -> " + e.what());
  }
}

Rational cycle_closed_form(long long n, long long l) {
  if (n < 4 || n % 2 != 0) out_of_domain("cycle_closed_form", "N must be even and >= 4");
  if (l < 1 || 2 * l > n) out_of_domain("cycle_closed_form", "l must be in 1..N/2");
  return Rational(BigInt(static_cast<long>(l)) * BigInt(static_cast<long>(n - l)),
                  BigInt(static_cast<long>(n)));
}

std::vector<FamilyTemplate> list_families() {
  std::vector<FamilyTemplate> out;
  for (const auto& g : generators()) out.push_back(g.info);
  return out;
}

std::vector<FamilySpec> catalog() {
  std::vector<FamilySpec> out;
  for (long long n : {3, 4, 5, 6, 7, 8, 12, 20, 21, 50}) out.push_back({"cycle", {{"N", n}}});
  for (long long d = 1; d <= 10; ++d) out.push_back({"hypercube", {{"d", d}}});
  for (auto [n, d] : {std::pair{4LL, 2LL}, {5, 2}, {6, 2}, {6, 3}, {7, 2}, {7, 3}, {8, 4}, {10, 5}}) {
    out.push_back({"johnson", {{"n", n}, {"d", d}}});
  }
  for (long long n : {2, 3, 5, 10}) out.push_back({"complete", {{"N", n}}});
  for (long long s : {2, 3, 4}) out.push_back({"gen_octagon", {{"s", s}}});
  for (long long l : {4, 5, 7, 8}) out.push_back({"incidence_pg", {{"l", l}}});
  for (long long g : {1, 2, 3}) out.push_back({"hadamard", {{"gamma", g}}});
  out.push_back({"classical", {{"d", 4}, {"q", 1}, {"alpha", 0}, {"beta", 1}}});
  out.push_back({"classical", {{"d", 3}, {"q", 2}, {"alpha", 0}, {"beta", 2}}});
  out.push_back({"dual_polar_B", {{"q", 2}, {"d", 4}}});
  out.push_back({"dual_polar_B", {{"q", 3}, {"d", 3}}});
  out.push_back({"m22", {}});
  for (long long s : {2, 3}) out.push_back({"gen_dodecagon", {{"s", s}}});
  for (long long g : {1, 2}) out.push_back({"family7", {{"gamma", g}}});
  out.push_back({"biggs_smith", {}});
  out.push_back({"foster", {}});
  return out;
}

void add_param(FamilySpec& spec, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(ErrorKind::ParseError, "expected key=value, got '" + assignment + "'");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::ParseError, "parameter '" + key + "' is not an integer: '" + text + "'");
  }
  spec.params[key] = value;
}

}  // namespace resdist
