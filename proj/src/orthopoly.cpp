#include "resdist/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "resdist/error.hpp"

namespace resdist {

namespace {

void require_degree(int k, int hi) {
  if (k < 0 || k > hi) {
    throw Error(ErrorKind::DegreeOutOfRange,
                "degree " + std::to_string(k) + " outside [0, " + std::to_string(hi) + "]");
  }
}

// Three-term recursion p_{j+1} = (x - alpha(j)) p_j - omega(j) p_{j-1} with
// p_0 = 1, p_1 = x - alpha(0); shift selects Q (0) or Q^(1) (1).
template <class T, class AlphaFn, class OmegaFn>
T three_term(int k, const T& x, AlphaFn alpha, OmegaFn omega) {
  T prev(1);
  if (k == 0) return prev;
  T cur = x - alpha(0);
  for (int j = 1; j < k; ++j) {
    T next = (x - alpha(j)) * cur - omega(j) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

JacobiData::JacobiData(std::vector<Rational> alpha, std::vector<Rational> omega)
    : alpha_(std::move(alpha)), omega_(std::move(omega)) {
  if (alpha_.size() != omega_.size() + 1 || omega_.empty()) {
    throw Error(ErrorKind::LengthMismatch, "Jacobi data needs d+1 alphas and d omegas");
  }
}

JacobiData jacobi_coefficients(const IntersectionArray& arr) {
  const int d = arr.diameter();
  std::vector<Rational> alpha;
  std::vector<Rational> omega;
  alpha.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) alpha.emplace_back(arr.a(k));
  for (int k = 1; k <= d; ++k) omega.push_back(Rational(arr.b(k - 1)) * Rational(arr.c(k)));
  return JacobiData(std::move(alpha), std::move(omega));
}

Rational eval_Q(const JacobiData& jd, int k, const Rational& x) {
  require_degree(k, jd.diameter() + 1);
  return three_term<Rational>(
      k, x, [&](int j) -> const Rational& { return jd.alpha(j); },
      [&](int j) -> const Rational& { return jd.omega(j); });
}

double eval_Q_float(const JacobiData& jd, int k, double x) {
  require_degree(k, jd.diameter() + 1);
  return three_term<double>(
      k, x, [&](int j) { return jd.alpha(j).to_double(); },
      [&](int j) { return jd.omega(j).to_double(); });
}

Rational eval_Q1(const JacobiData& jd, int k, const Rational& x) {
  require_degree(k, jd.diameter());
  return three_term<Rational>(
      k, x, [&](int j) -> const Rational& { return jd.alpha(j + 1); },
      [&](int j) -> const Rational& { return jd.omega(j + 1); });
}

Rational stieltjes_cf(const JacobiData& jd, const Rational& x) {
  const int d = jd.diameter();
  Rational tail = x - jd.alpha(d);
  for (int k = d - 1; k >= 0; --k) {
    if (tail.is_zero()) {
      throw Error(ErrorKind::PoleEncountered,
                  "continued fraction breaks down at level " + std::to_string(k + 1) +
                      " for x = " + x.str());
    }
    tail = x - jd.alpha(k) - jd.omega(k + 1) / tail;
  }
  if (tail.is_zero()) {
    throw Error(ErrorKind::PoleEncountered, "x = " + x.str() + " is an eigenvalue");
  }
  return Rational(1) / tail;
}

SpectralData spectral_data(const IntersectionArray& arr) {
  const int d = arr.diameter();
  const JacobiData jd = jacobi_coefficients(arr);
  Eigen::VectorXd diag(d + 1);
  Eigen::VectorXd sub(d);
  for (int k = 0; k <= d; ++k) diag(k) = jd.alpha(k).to_double();
  for (int k = 1; k <= d; ++k) sub(k - 1) = std::sqrt(jd.omega(k).to_double());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::EigenFailure, "tridiagonal eigensolver did not converge");
  }

  // Eigen returns ascending order; the measure is listed from kappa downwards.
  SpectralData out;
  const double n = static_cast<double>(arr.order());
  for (int l = d; l >= 0; --l) {
    const double first = solver.eigenvectors()(0, l);
    out.eigenvalues.push_back(solver.eigenvalues()(l));
    out.masses.push_back(first * first);
    out.multiplicities.push_back(n * first * first);
  }
  return out;
}

double distance_polynomial(const IntersectionArray& arr, const JacobiData& jd, int m, double x) {
  double scale = std::sqrt(static_cast<double>(arr.kappa(m)));
  for (int k = 1; k <= m; ++k) scale /= std::sqrt(jd.omega(k).to_double());
  return scale * eval_Q_float(jd, m, x);
}

double resistance_spectral(const IntersectionArray& arr, int m) {
  return resistance_spectral(arr, spectral_data(arr), m);
}

double resistance_spectral(const IntersectionArray& arr, const SpectralData& spec, int m) {
  const int d = arr.diameter();
  if (m < 1 || m > d) {
    throw Error(ErrorKind::StratumOutOfRange,
                "stratum " + std::to_string(m) + " outside [1, " + std::to_string(d) + "]");
  }
  const JacobiData jd = jacobi_coefficients(arr);
  const double k = static_cast<double>(arr.valency());
  const double km = static_cast<double>(arr.kappa(m));
  double sum = 0.0;
  for (int i = 1; i <= d; ++i) {
    const double x = spec.eigenvalues[static_cast<std::size_t>(i)];
    const double mult = spec.multiplicities[static_cast<std::size_t>(i)];
    sum += mult / (k - x) * (1.0 - distance_polynomial(arr, jd, m, x) / km);
  }
  return 2.0 * sum / static_cast<double>(arr.order());
}

Eigen::MatrixXd eigenmatrix_P(const IntersectionArray& arr) {
  return eigenmatrix_P(arr, spectral_data(arr));
}

Eigen::MatrixXd eigenmatrix_P(const IntersectionArray& arr, const SpectralData& spec) {
  const int d = arr.diameter();
  const JacobiData jd = jacobi_coefficients(arr);
  Eigen::MatrixXd p(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      p(i, j) = distance_polynomial(arr, jd, i, spec.eigenvalues[static_cast<std::size_t>(j)]);
    }
  }
  return p;
}

double kirchhoff_sum_spectral(const IntersectionArray& arr, const SpectralData& spec) {
  const double k = static_cast<double>(arr.valency());
  double sum = 0.0;
  for (std::size_t i = 1; i < spec.eigenvalues.size(); ++i) {
    sum += spec.multiplicities[i] / (k - spec.eigenvalues[i]);
  }
  return 2.0 * sum;
}

std::vector<double> trace_sums(const IntersectionArray& arr, const SpectralData& spec) {
  const Eigen::MatrixXd p = eigenmatrix_P(arr, spec);
  std::vector<double> out;
  for (Eigen::Index l = 0; l < p.rows(); ++l) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      sum += p(l, j) * spec.multiplicities[static_cast<std::size_t>(j)];
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace resdist
