#pragma once

#include <vector>

#include "resdist/intersection_array.hpp"
#include "resdist/rational.hpp"

namespace resdist {

/// Per-stratum two-point resistances of a distance-regular network with unit
/// edge resistances, computed exactly from the intersection array.
///
/// Stratum indices are 1-based throughout: resistance(m) is the resistance
/// between a vertex and any vertex at shortest-path distance m from it.
struct ResistanceTable {
  IntersectionArray arr;
  std::vector<Rational> resistances;  // R^(1)..R^(d)
  std::vector<Rational> increments;   // R^(m+1) - R^(m), m = 1..d-1
  std::vector<Rational> commute;      // N kappa R^(m), m = 1..d

  int diameter() const { return arr.diameter(); }
  const Rational& resistance(int m) const;
  const Rational& increment(int m) const;
  const Rational& commute_time(int m) const;
};

/// R^(1) = 2(N-1)/(N kappa).
Rational first_stratum_resistance(const IntersectionArray& arr);

/// R^(m+1) - R^(m) = 2 (N - sum_{l<=m} kappa_l) / (N kappa_m b_m), for
/// 1 <= m <= d-1. Throws StratumOutOfRange otherwise.
Rational resistance_increment(const IntersectionArray& arr, int m);

ResistanceTable resistance_table(const IntersectionArray& arr);

/// Average commute time n(alpha, beta) = N kappa R^(m) of the uniform random
/// walk, 1 <= m <= d.
Rational commute_time(const IntersectionArray& arr, int m);

}  // namespace resdist
