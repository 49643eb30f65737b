#pragma once

#include <vector>

#include <Eigen/Core>

#include "resdist/intersection_array.hpp"
#include "resdist/rational.hpp"

namespace resdist {

/// Recursion coefficients of the symmetric tridiagonal (Jacobi) matrix that
/// the adjacency matrix becomes in the stratification basis:
///   alpha_0 = 0, alpha_k = a_k,  omega_k = beta_k^2 = b_{k-1} c_k.
class JacobiData {
 public:
  JacobiData(std::vector<Rational> alpha, std::vector<Rational> omega);

  int diameter() const { return static_cast<int>(omega_.size()); }
  /// 0 <= k <= d
  const Rational& alpha(int k) const { return alpha_.at(static_cast<std::size_t>(k)); }
  /// 1 <= k <= d
  const Rational& omega(int k) const { return omega_.at(static_cast<std::size_t>(k - 1)); }

  const std::vector<Rational>& alpha_list() const { return alpha_; }
  const std::vector<Rational>& omega_list() const { return omega_; }

 private:
  std::vector<Rational> alpha_;  // size d+1
  std::vector<Rational> omega_;  // size d
};

JacobiData jacobi_coefficients(const IntersectionArray& arr);

/// Monic orthogonal polynomial Q_k(x), 0 <= k <= d+1, by the three-term
/// recursion x Q_k = Q_{k+1} + alpha_k Q_k + omega_k Q_{k-1}. Q_{d+1} is the
/// characteristic polynomial of the Jacobi matrix.
Rational eval_Q(const JacobiData& jd, int k, const Rational& x);
double eval_Q_float(const JacobiData& jd, int k, double x);

/// First associated polynomial Q^(1)_k(x), 0 <= k <= d: the same recursion
/// with coefficients shifted by one (alpha_{k+1}, omega_{k+1}).
Rational eval_Q1(const JacobiData& jd, int k, const Rational& x);

/// Stieltjes function G(x) = 1/(x - alpha_0 - omega_1/(x - alpha_1 - ...))
/// as a depth d+1 finite continued fraction, evaluated bottom-up. Equals
/// Q^(1)_d(x) / Q_{d+1}(x). Throws PoleEncountered when any partial
/// denominator vanishes.
Rational stieltjes_cf(const JacobiData& jd, const Rational& x);

/// Atoms of the spectral measure of the adjacency matrix seen from one vertex.
struct SpectralData {
  std::vector<double> eigenvalues;     // x_0 = kappa > x_1 > ... > x_d
  std::vector<double> masses;          // b_l, summing to one
  std::vector<double> multiplicities;  // m_l = N b_l
};

SpectralData spectral_data(const IntersectionArray& arr);

/// Distance polynomial P_m(x) = sqrt(kappa_m) Q_m(x) / (beta_1...beta_m), so
/// that A_m = P_m(A).
double distance_polynomial(const IntersectionArray& arr, const JacobiData& jd, int m, double x);

/// R^(m) from the spectrum: (2/N) sum_{i>0} m_i/(kappa-x_i) (1 - P_m(x_i)/kappa_m).
double resistance_spectral(const IntersectionArray& arr, int m);
double resistance_spectral(const IntersectionArray& arr, const SpectralData& spec, int m);

/// Row i, column j holds P_i(x_j).
Eigen::MatrixXd eigenmatrix_P(const IntersectionArray& arr);
Eigen::MatrixXd eigenmatrix_P(const IntersectionArray& arr, const SpectralData& spec);

/// 2 sum_{i>0} m_i/(kappa-x_i); equals sum_m kappa_m R^(m).
double kirchhoff_sum_spectral(const IntersectionArray& arr, const SpectralData& spec);

/// sum_j P_l(x_j) m_j for l = 0..d; these are the traces of the distance
/// matrices A_l, i.e. N for l = 0 and zero otherwise.
std::vector<double> trace_sums(const IntersectionArray& arr, const SpectralData& spec);

}  // namespace resdist
