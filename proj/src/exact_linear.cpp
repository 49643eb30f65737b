#include "resdist/exact_linear.hpp"

#include <utility>

#include "resdist/error.hpp"

namespace resdist {

std::vector<std::vector<Rational>> solve_fraction_free(IntMatrix a, const IntMatrix& rhs) {
  const std::size_t n = a.rows;
  if (a.cols != n || rhs.rows != n) {
    throw Error(ErrorKind::LengthMismatch, "solve_fraction_free needs a square system");
  }
  const std::size_t width = n + rhs.cols;
  IntMatrix m(n, width);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = std::move(a(i, j));
    for (std::size_t j = 0; j < rhs.cols; ++j) m(i, n + j) = rhs(i, j);
  }

  // After step k every entry below the diagonal block is a (k+1)x(k+1) minor,
  // so the division by the previous pivot is exact.
  BigInt prev = 1;
  BigInt tmp;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) throw Error(ErrorKind::SingularSystem, "matrix is singular");
      for (std::size_t j = k; j < width; ++j) std::swap(m(k, j), m(p, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        tmp = m(i, j) * m(k, k);
        tmp -= m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }

  std::vector<std::vector<Rational>> solution(rhs.cols, std::vector<Rational>(n));
  for (std::size_t col = 0; col < rhs.cols; ++col) {
    auto& x = solution[col];
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc(m(ii, n + col));
      for (std::size_t j = ii + 1; j < n; ++j) {
        if (m(ii, j) != 0) acc -= Rational(m(ii, j)) * x[j];
      }
      x[ii] = acc / Rational(m(ii, ii));
    }
  }
  return solution;
}

}  // namespace resdist
