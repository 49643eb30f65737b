#pragma once

#include <vector>

#include "resdist/rational.hpp"

namespace resdist {

/// Dense row-major integer matrix for fraction-free elimination.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  BigInt& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Solves A X = B exactly for square A by Bareiss (fraction-free) elimination,
/// returning X column by column. Throws SingularSystem when A is singular.
std::vector<std::vector<Rational>> solve_fraction_free(IntMatrix a, const IntMatrix& rhs);

}  // namespace resdist
