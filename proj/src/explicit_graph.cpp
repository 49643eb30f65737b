#include "resdist/explicit_graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "resdist/error.hpp"
#include "resdist/exact_linear.hpp"
#include "resdist/resistance.hpp"

namespace resdist {

namespace {

constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();

void require_vertex(const ExplicitGraph& g, int v) {
  if (v < 0 || v >= g.size()) {
    throw Error(ErrorKind::InvalidGraph, "vertex " + std::to_string(v) + " out of range");
  }
}

std::vector<std::uint16_t> bfs(const std::vector<std::vector<int>>& adj, int source) {
  std::vector<std::uint16_t> dist(adj.size(), kUnreached);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<std::size_t>(u)]) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw == kUnreached) {
        dw = static_cast<std::uint16_t>(dist[static_cast<std::size_t>(u)] + 1);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

long long binomial(long long n, long long k) {
  long long out = 1;
  for (long long i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > kMaxExplicitVertices) return out;
  }
  return out;
}

void guard_size(const FamilySpec& spec, long long n) {
  if (n > kMaxExplicitVertices) {
    throw Error(ErrorKind::TooLarge, spec.label() + " has " + std::to_string(n) +
                                         " vertices; explicit graphs are limited to " +
                                         std::to_string(kMaxExplicitVertices));
  }
}

ExplicitGraph make_cycle(long long n) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (long long v = 0; v < n; ++v) {
    labels.push_back(std::to_string(v));
    adj[static_cast<std::size_t>(v)] = {static_cast<int>((v + n - 1) % n),
                                        static_cast<int>((v + 1) % n)};
  }
  return ExplicitGraph(std::move(labels), std::move(adj));
}

// Vertices are d-bit strings; neighbours differ in exactly one bit.
ExplicitGraph make_hypercube(int d) {
  const int n = 1 << d;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::string bits;
    for (int i = d - 1; i >= 0; --i) bits.push_back(((v >> i) & 1) ? '1' : '0');
    labels.push_back(std::move(bits));
    for (int i = 0; i < d; ++i) adj[static_cast<std::size_t>(v)].push_back(v ^ (1 << i));
  }
  return ExplicitGraph(std::move(labels), std::move(adj));
}

// Vertices are d-subsets of {1..n}; adjacent when they share d-1 elements.
ExplicitGraph make_johnson(int n, int d) {
  std::vector<std::vector<int>> subsets;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(current.size()) == d) {
      subsets.push_back(current);
      return;
    }
    for (int x = next; x <= n; ++x) {
      current.push_back(x);
      rec(x + 1);
      current.pop_back();
    }
  };
  rec(1);

  std::vector<std::string> labels;
  for (const auto& s : subsets) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    labels.push_back(os.str());
  }
  std::vector<std::vector<int>> adj(subsets.size());
  for (std::size_t u = 0; u < subsets.size(); ++u) {
    for (std::size_t v = u + 1; v < subsets.size(); ++v) {
      std::vector<int> common;
      std::set_intersection(subsets[u].begin(), subsets[u].end(), subsets[v].begin(),
                            subsets[v].end(), std::back_inserter(common));
      if (static_cast<int>(common.size()) == d - 1) {
        adj[u].push_back(static_cast<int>(v));
        adj[v].push_back(static_cast<int>(u));
      }
    }
  }
  return ExplicitGraph(std::move(labels), std::move(adj));
}

ExplicitGraph make_complete(long long n) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (long long v = 0; v < n; ++v) {
    labels.push_back(std::to_string(v));
    for (long long w = 0; w < n; ++w) {
      if (w != v) adj[static_cast<std::size_t>(v)].push_back(static_cast<int>(w));
    }
  }
  return ExplicitGraph(std::move(labels), std::move(adj));
}

// Unbiased draw from [0, bound).
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t threshold = (0 - b) % b;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return static_cast<std::size_t>(r % b);
  }
}

IntMatrix grounded_laplacian(const ExplicitGraph& g, int ground, std::vector<int>& index) {
  const int n = g.size();
  index.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (v != ground) index[static_cast<std::size_t>(v)] = next++;
  }
  IntMatrix lap(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1));
  for (int v = 0; v < n; ++v) {
    const int iv = index[static_cast<std::size_t>(v)];
    if (iv < 0) continue;
    lap(static_cast<std::size_t>(iv), static_cast<std::size_t>(iv)) = g.degree();
    for (int w : g.neighbors(v)) {
      const int iw = index[static_cast<std::size_t>(w)];
      if (iw >= 0) lap(static_cast<std::size_t>(iv), static_cast<std::size_t>(iw)) = -1;
    }
  }
  return lap;
}

void guard_oracle(const ExplicitGraph& g) {
  if (g.size() > kMaxOracleVertices) {
    throw Error(ErrorKind::TooLarge, "exact oracle solve is limited to " +
                                         std::to_string(kMaxOracleVertices) + " vertices");
  }
}

}  // namespace

ExplicitGraph::ExplicitGraph(std::vector<std::string> labels, std::vector<std::vector<int>> adjacency)
    : labels_(std::move(labels)), adjacency_(std::move(adjacency)) {
  const int n = static_cast<int>(adjacency_.size());
  if (n == 0) throw Error(ErrorKind::InvalidGraph, "graph has no vertices");
  if (labels_.size() != adjacency_.size()) {
    throw Error(ErrorKind::InvalidGraph, "one label per vertex required");
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  degree_ = static_cast<int>(adjacency_.front().size());
  for (int v = 0; v < n; ++v) {
    const auto& nbrs = adjacency_[static_cast<std::size_t>(v)];
    if (static_cast<int>(nbrs.size()) != degree_) {
      throw Error(ErrorKind::InvalidGraph, "graph is not regular at vertex " + std::to_string(v));
    }
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw Error(ErrorKind::InvalidGraph, "repeated edge at vertex " + std::to_string(v));
    }
    for (int w : nbrs) {
      if (w < 0 || w >= n) throw Error(ErrorKind::InvalidGraph, "neighbour index out of range");
      if (w == v) throw Error(ErrorKind::InvalidGraph, "self-loop at vertex " + std::to_string(v));
      if (!adjacent(w, v)) throw Error(ErrorKind::InvalidGraph, "adjacency is not symmetric");
    }
  }
  const auto dist = bfs(adjacency_, 0);
  if (std::find(dist.begin(), dist.end(), kUnreached) != dist.end()) {
    throw Error(ErrorKind::InvalidGraph, "graph is not connected");
  }
}

bool ExplicitGraph::adjacent(int u, int v) const {
  const auto& nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

ExplicitGraph build_graph(const FamilySpec& spec) {
  // family_array performs all parameter-domain checks.
  family_array(spec);
  if (spec.name == "cycle") {
    const long long n = spec.params.at("N");
    guard_size(spec, n);
    return make_cycle(n);
  }
  if (spec.name == "hypercube") {
    const long long d = spec.params.at("d");
    guard_size(spec, d >= 62 ? kMaxExplicitVertices + 1 : (1LL << d));
    return make_hypercube(static_cast<int>(d));
  }
  if (spec.name == "johnson") {
    const long long n = spec.params.at("n");
    const long long d = spec.params.at("d");
    guard_size(spec, binomial(n, d));
    return make_johnson(static_cast<int>(n), static_cast<int>(d));
  }
  if (spec.name == "complete") {
    const long long n = spec.params.at("N");
    guard_size(spec, n);
    return make_complete(n);
  }
  throw Error(ErrorKind::ParamOutOfDomain,
              "no explicit construction for family '" + spec.name +
                  "'; supported: cycle, hypercube, johnson, complete");
}

std::vector<long long> Stratification::sizes() const {
  std::vector<long long> out;
  for (const auto& s : strata) out.push_back(static_cast<long long>(s.size()));
  return out;
}

std::vector<int> Stratification::distance() const {
  std::size_t n = 0;
  for (const auto& s : strata) n += s.size();
  std::vector<int> out(n, -1);
  for (std::size_t i = 0; i < strata.size(); ++i) {
    for (int v : strata[i]) out[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  return out;
}

Stratification stratify(const ExplicitGraph& g, int reference) {
  require_vertex(g, reference);
  std::vector<std::vector<int>> adj;
  adj.reserve(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) adj.push_back(g.neighbors(v));
  const auto dist = bfs(adj, reference);
  Stratification out;
  out.reference = reference;
  for (int v = 0; v < g.size(); ++v) {
    const std::size_t layer = dist[static_cast<std::size_t>(v)];
    if (out.strata.size() <= layer) out.strata.resize(layer + 1);
    out.strata[layer].push_back(v);
  }
  return out;
}

std::vector<std::uint16_t> distance_matrix(const ExplicitGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<std::vector<int>> adj;
  adj.reserve(n);
  for (int v = 0; v < g.size(); ++v) adj.push_back(g.neighbors(v));
  std::vector<std::uint16_t> out(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto row = bfs(adj, static_cast<int>(u));
    std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(u * n));
  }
  return out;
}

IntersectionArray verify_distance_regular(const ExplicitGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  const auto dist = distance_matrix(g);
  const auto at = [&](std::size_t u, std::size_t v) { return static_cast<int>(dist[u * n + v]); };
  const int diameter = *std::max_element(dist.begin(), dist.end());
  if (diameter == 0) throw Error(ErrorKind::NotDistanceRegular, "single vertex has no array");

  // counts[i] = (c_i, a_i, b_i), -1 until first seen
  std::vector<std::array<long long, 3>> counts(static_cast<std::size_t>(diameter) + 1,
                                               {-1, -1, -1});
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const int i = at(u, v);
      std::array<long long, 3> here{0, 0, 0};
      for (int w : g.neighbors(static_cast<int>(v))) {
        here[static_cast<std::size_t>(at(u, static_cast<std::size_t>(w)) - i + 1)] += 1;
      }
      auto& seen = counts[static_cast<std::size_t>(i)];
      if (seen[0] < 0) {
        seen = here;
      } else if (seen != here) {
        throw Error(ErrorKind::NotDistanceRegular,
                    "neighbour counts differ between pairs at distance " + std::to_string(i));
      }
    }
  }

  std::vector<long long> b;
  std::vector<long long> c;
  for (int i = 0; i < diameter; ++i) b.push_back(counts[static_cast<std::size_t>(i)][2]);
  for (int i = 1; i <= diameter; ++i) c.push_back(counts[static_cast<std::size_t>(i)][0]);
  IntersectionArray arr = [&] {
    try {
      return IntersectionArray::validate(b, c);
    } catch (const Error& e) {
      throw Error(ErrorKind::NotDistanceRegular, std::string("recovered array invalid: ") + e.what());
    }
  }();

  // (A_1 A_j)_{uv} = #{w ~ u : dist(w, v) = j}
  std::vector<long long> row(static_cast<std::size_t>(diameter) + 1);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      std::fill(row.begin(), row.end(), 0);
      for (int w : g.neighbors(static_cast<int>(u))) row[static_cast<std::size_t>(at(static_cast<std::size_t>(w), v))] += 1;
      const int duv = at(u, v);
      for (int j = 0; j <= diameter; ++j) {
        long long expect = 0;
        if (duv == j - 1) expect = arr.b(j - 1);
        if (duv == j) expect = arr.a(j);
        if (duv == j + 1) expect = arr.c(j + 1);
        if (row[static_cast<std::size_t>(j)] != expect) {
          throw Error(ErrorKind::NotDistanceRegular,
                      "distance-matrix recursion fails for A_1 A_" + std::to_string(j));
        }
      }
    }
  }
  return arr;
}

Rational oracle_resistance(const ExplicitGraph& g, int source, int sink) {
  require_vertex(g, source);
  require_vertex(g, sink);
  if (source == sink) throw Error(ErrorKind::InvalidGraph, "source and sink must differ");
  guard_oracle(g);
  std::vector<int> index;
  IntMatrix lap = grounded_laplacian(g, sink, index);
  IntMatrix current(lap.rows, 1);
  const auto src = static_cast<std::size_t>(index[static_cast<std::size_t>(source)]);
  current(src, 0) = 1;
  const auto potentials = solve_fraction_free(std::move(lap), current);
  return potentials[0][src];
}

std::vector<Rational> oracle_resistances_from(const ExplicitGraph& g, int source) {
  require_vertex(g, source);
  guard_oracle(g);
  std::vector<int> index;
  IntMatrix lap = grounded_laplacian(g, source, index);
  IntMatrix currents(lap.rows, lap.rows);
  for (std::size_t i = 0; i < lap.rows; ++i) currents(i, i) = 1;
  // Injecting at v with the source grounded: V_v = R(source, v).
  const auto potentials = solve_fraction_free(std::move(lap), currents);
  std::vector<Rational> out(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) {
    const int iv = index[static_cast<std::size_t>(v)];
    if (iv >= 0) out[static_cast<std::size_t>(v)] = potentials[static_cast<std::size_t>(iv)][static_cast<std::size_t>(iv)];
  }
  return out;
}

CommuteEstimate mc_commute_time(const ExplicitGraph& g, int source, int target, long long walks,
                                std::uint64_t seed) {
  require_vertex(g, source);
  require_vertex(g, target);
  if (source == target) throw Error(ErrorKind::InvalidGraph, "source and target must differ");
  if (walks < 1) throw Error(ErrorKind::ParamOutOfDomain, "walks must be >= 1");

  std::mt19937_64 rng(seed);
  const auto step = [&](int v) {
    const auto& nbrs = g.neighbors(v);
    return nbrs[draw(rng, nbrs.size())];
  };
  // Welford running mean and variance.
  double mean = 0.0;
  double m2 = 0.0;
  for (long long w = 1; w <= walks; ++w) {
    long long steps = 0;
    int pos = source;
    do {
      pos = step(pos);
      ++steps;
    } while (pos != target);
    do {
      pos = step(pos);
      ++steps;
    } while (pos != source);
    const double x = static_cast<double>(steps);
    const double delta = x - mean;
    mean += delta / static_cast<double>(w);
    m2 += delta * (x - mean);
  }
  CommuteEstimate out;
  out.mean = mean;
  out.walks = walks;
  out.std_error = walks > 1 ? std::sqrt(m2 / static_cast<double>(walks - 1) / static_cast<double>(walks)) : 0.0;
  return out;
}

OracleReport cross_check(const FamilySpec& spec, int reference) {
  OracleReport report;
  report.family = spec;
  report.expected = family_array(spec);
  const ExplicitGraph g = build_graph(spec);
  try {
    report.recovered = verify_distance_regular(g);
  } catch (const Error& e) {
    report.mismatches.emplace_back(e.what());
    return report;
  }
  if (!(*report.recovered == *report.expected)) {
    report.mismatches.emplace_back("recovered array differs from the family generator");
  }

  const Stratification strata = stratify(g, reference);
  report.strata_sizes = strata.sizes();
  if (report.strata_sizes != report.recovered->kappa_list()) {
    report.mismatches.emplace_back("strata sizes differ from the valencies");
  }

  const ResistanceTable table = resistance_table(*report.recovered);
  for (std::size_t m = 1; m < strata.strata.size(); ++m) {
    const Rational& expected = table.resistance(static_cast<int>(m));
    for (int beta : strata.strata[m]) {
      const Rational r = oracle_resistance(g, reference, beta);
      ++report.pairs_checked;
      if (r != expected) {
        report.mismatches.push_back("stratum " + std::to_string(m) + ", vertex " + g.label(beta) +
                                    ": oracle " + r.str() + " vs recursion " + expected.str());
      }
    }
  }
  return report;
}

}  // namespace resdist
