#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resdist/families.hpp"
#include "resdist/intersection_array.hpp"
#include "resdist/rational.hpp"

namespace resdist {

/// Regular, connected, simple graph given by adjacency lists. Every edge is a
/// unit resistor.
class ExplicitGraph {
 public:
  /// Throws InvalidGraph unless the relation is irreflexive, symmetric,
  /// connected and regular.
  ExplicitGraph(std::vector<std::string> labels, std::vector<std::vector<int>> adjacency);

  int size() const { return static_cast<int>(adjacency_.size()); }
  int degree() const { return degree_; }
  long long edge_count() const { return static_cast<long long>(size()) * degree_ / 2; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  bool adjacent(int u, int v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adjacency_;  // sorted
  int degree_ = 0;
};

inline constexpr long long kMaxExplicitVertices = 5000;
inline constexpr long long kMaxOracleVertices = 400;

/// Vertex-level construction for cycle, hypercube, johnson and complete.
ExplicitGraph build_graph(const FamilySpec& spec);

/// Shortest-path layers Gamma_0(reference)..Gamma_d(reference).
struct Stratification {
  int reference = 0;
  std::vector<std::vector<int>> strata;

  std::vector<long long> sizes() const;
  /// stratum index of every vertex
  std::vector<int> distance() const;
};

Stratification stratify(const ExplicitGraph& g, int reference);

/// All-pairs shortest-path distances, row-major.
std::vector<std::uint16_t> distance_matrix(const ExplicitGraph& g);

/// Recovers the intersection array by counting, for every pair at distance i,
/// the neighbours of the second vertex at distances i-1, i, i+1 from the
/// first, and then checks A_1 A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}
/// entrywise on the distance matrices. Throws NotDistanceRegular on any
/// inconsistency.
IntersectionArray verify_distance_regular(const ExplicitGraph& g);

/// Exact two-point resistance: ground `sink`, inject unit current at
/// `source` and read the source potential from the grounded Kirchhoff
/// system (kappa I - A with the sink row and column removed).
Rational oracle_resistance(const ExplicitGraph& g, int source, int sink);

/// Resistances from `source` to every vertex (zero at the source) with one
/// multi-right-hand-side solve of the system grounded at `source`.
std::vector<Rational> oracle_resistances_from(const ExplicitGraph& g, int source);

struct CommuteEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long walks = 0;
};

/// Monte Carlo estimate of the average commute time between `source` and
/// `target` for the uniform nearest-neighbour walk. The seed fully
/// determines the result.
CommuteEstimate mc_commute_time(const ExplicitGraph& g, int source, int target, long long walks,
                                std::uint64_t seed);

/// Outcome of checking the recursion against the explicit graph.
struct OracleReport {
  FamilySpec family;
  std::optional<IntersectionArray> expected;   // from the family generator
  std::optional<IntersectionArray> recovered;  // from the explicit graph
  std::vector<long long> strata_sizes;
  long long pairs_checked = 0;
  std::vector<std::string> mismatches;

  bool exact_match() const { return mismatches.empty(); }
};

/// Builds the explicit graph, recovers its array, compares it and the strata
/// sizes with the family generator, and compares oracle_resistance with the
/// recursion for every vertex as seen from `reference`.
OracleReport cross_check(const FamilySpec& spec, int reference = 0);

}  // namespace resdist
