#include "resdist/resistance.hpp"

#include <string>

#include "resdist/error.hpp"

namespace resdist {

namespace {

void require_stratum(int m, int lo, int hi) {
  if (m < lo || m > hi) {
    throw Error(ErrorKind::StratumOutOfRange, "stratum " + std::to_string(m) + " outside [" +
                                                  std::to_string(lo) + ", " + std::to_string(hi) +
                                                  "]");
  }
}

const Rational& at_stratum(const std::vector<Rational>& values, int m, int lo) {
  require_stratum(m, lo, static_cast<int>(values.size()) + lo - 1);
  return values[static_cast<std::size_t>(m - lo)];
}

}  // namespace

const Rational& ResistanceTable::resistance(int m) const { return at_stratum(resistances, m, 1); }

const Rational& ResistanceTable::increment(int m) const { return at_stratum(increments, m, 1); }

const Rational& ResistanceTable::commute_time(int m) const { return at_stratum(commute, m, 1); }

Rational first_stratum_resistance(const IntersectionArray& arr) {
  const long long n = arr.order();
  return Rational(2) * Rational(n - 1) / (Rational(n) * Rational(arr.valency()));
}

Rational resistance_increment(const IntersectionArray& arr, int m) {
  require_stratum(m, 1, arr.diameter() - 1);
  // N exceeds the partial valency sum whenever m < d, so the result is > 0.
  BigInt outside(static_cast<long>(arr.order()));
  for (int l = 0; l <= m; ++l) outside -= static_cast<long>(arr.kappa(l));
  const BigInt denom = BigInt(static_cast<long>(arr.order())) *
                       BigInt(static_cast<long>(arr.kappa(m))) *
                       BigInt(static_cast<long>(arr.b(m)));
  return Rational(BigInt(2 * outside), denom);
}

ResistanceTable resistance_table(const IntersectionArray& arr) {
  const int d = arr.diameter();
  ResistanceTable table{arr, {}, {}, {}};
  table.resistances.reserve(static_cast<std::size_t>(d));
  table.resistances.push_back(first_stratum_resistance(arr));
  for (int m = 1; m < d; ++m) {
    table.increments.push_back(resistance_increment(arr, m));
    table.resistances.push_back(table.resistances.back() + table.increments.back());
  }
  const Rational volume = Rational(arr.order()) * Rational(arr.valency());
  for (const Rational& r : table.resistances) table.commute.push_back(volume * r);
  return table;
}

Rational commute_time(const IntersectionArray& arr, int m) {
  require_stratum(m, 1, arr.diameter());
  return resistance_table(arr).commute[static_cast<std::size_t>(m - 1)];
}

}  // namespace resdist
