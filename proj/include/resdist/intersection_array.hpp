#pragma once

#include <span>
#include <vector>

namespace resdist {

/// Validated intersection array {b_0..b_{d-1}; c_1..c_d} of a distance-regular
/// network, together with everything derivable from it: the diameter d, the
/// stratum sizes (valencies) kappa_0..kappa_d, the intersection numbers
/// a_0..a_d and the order N.
///
/// Only the arithmetic feasibility conditions are checked:
///   c_1 = 1, kappa_{i-1} b_{i-1} = kappa_i c_i with kappa_i integral,
///   a_i = kappa - b_i - c_i >= 0 (with c_0 = b_d = 0).
/// Whether a graph realizing the array exists is not decided here.
///
/// Instances are immutable; the only way to obtain one is validate().
class IntersectionArray {
 public:
  static IntersectionArray validate(std::span<const long long> b, std::span<const long long> c);

  int diameter() const { return static_cast<int>(b_.size()); }
  /// kappa = b_0, the common vertex degree.
  long long valency() const { return b_.front(); }
  long long order() const { return order_; }

  /// b_i for 0 <= i <= d; b_d = 0.
  long long b(int i) const;
  /// c_i for 0 <= i <= d; c_0 = 0.
  long long c(int i) const;
  /// a_i for 0 <= i <= d.
  long long a(int i) const { return a_.at(static_cast<std::size_t>(i)); }
  /// kappa_i = |Gamma_i(alpha)| for 0 <= i <= d.
  long long kappa(int i) const { return kappa_.at(static_cast<std::size_t>(i)); }

  const std::vector<long long>& b_list() const { return b_; }
  const std::vector<long long>& c_list() const { return c_; }
  const std::vector<long long>& kappa_list() const { return kappa_; }
  const std::vector<long long>& a_list() const { return a_; }

  friend bool operator==(const IntersectionArray& lhs, const IntersectionArray& rhs) {
    return lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_;
  }

 private:
  IntersectionArray() = default;

  std::vector<long long> b_;      // b_0..b_{d-1}
  std::vector<long long> c_;      // c_1..c_d
  std::vector<long long> kappa_;  // kappa_0..kappa_d
  std::vector<long long> a_;      // a_0..a_d
  long long order_ = 0;
};

IntersectionArray validate_intersection_array(std::span<const long long> b,
                                              std::span<const long long> c);

/// N = sum of the valencies.
long long order(const IntersectionArray& arr);

}  // namespace resdist
