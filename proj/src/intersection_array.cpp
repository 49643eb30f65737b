#include "resdist/intersection_array.hpp"

#include <string>

#include "resdist/error.hpp"

namespace resdist {

namespace {

long long checked_mul(long long x, long long y) {
  long long out = 0;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw Error(ErrorKind::Overflow, std::to_string(x) + " * " + std::to_string(y));
  }
  return out;
}

long long checked_add(long long x, long long y) {
  long long out = 0;
  if (__builtin_add_overflow(x, y, &out)) {
    throw Error(ErrorKind::Overflow, std::to_string(x) + " + " + std::to_string(y));
  }
  return out;
}

}  // namespace

IntersectionArray IntersectionArray::validate(std::span<const long long> b,
                                              std::span<const long long> c) {
  if (b.empty()) throw Error(ErrorKind::EmptyArray, "b must contain at least b_0");
  if (b.size() != c.size()) {
    throw Error(ErrorKind::LengthMismatch, "|b| = " + std::to_string(b.size()) +
                                               " but |c| = " + std::to_string(c.size()));
  }
  const std::size_t d = b.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (b[i] <= 0) throw Error(ErrorKind::ZeroEntry, "b_" + std::to_string(i) + " must be positive");
    if (c[i] <= 0) {
      throw Error(ErrorKind::ZeroEntry, "c_" + std::to_string(i + 1) + " must be positive");
    }
  }
  if (c[0] != 1) throw Error(ErrorKind::FirstCNotOne, "c_1 = " + std::to_string(c[0]));

  IntersectionArray arr;
  arr.b_.assign(b.begin(), b.end());
  arr.c_.assign(c.begin(), c.end());
  const long long k = b[0];

  arr.kappa_.assign(d + 1, 1);
  for (std::size_t i = 1; i <= d; ++i) {
    const long long flow = checked_mul(arr.kappa_[i - 1], b[i - 1]);
    if (flow % c[i - 1] != 0) {
      throw Error(ErrorKind::NonIntegralValency,
                  "kappa_" + std::to_string(i - 1) + " * b_" + std::to_string(i - 1) + " = " +
                      std::to_string(flow) + " is not divisible by c_" + std::to_string(i) +
                      " = " + std::to_string(c[i - 1]));
    }
    arr.kappa_[i] = flow / c[i - 1];
  }

  arr.a_.assign(d + 1, 0);
  for (std::size_t i = 1; i <= d; ++i) {
    const long long bi = i < d ? b[i] : 0;
    arr.a_[i] = k - bi - c[i - 1];
    if (arr.a_[i] < 0) {
      throw Error(ErrorKind::NegativeIntersectionNumber,
                  "a_" + std::to_string(i) + " = " + std::to_string(arr.a_[i]));
    }
  }

  for (long long kap : arr.kappa_) arr.order_ = checked_add(arr.order_, kap);
  return arr;
}

long long IntersectionArray::b(int i) const {
  if (i == diameter()) return 0;
  return b_.at(static_cast<std::size_t>(i));
}

long long IntersectionArray::c(int i) const {
  if (i == 0) return 0;
  return c_.at(static_cast<std::size_t>(i - 1));
}

IntersectionArray validate_intersection_array(std::span<const long long> b,
                                              std::span<const long long> c) {
  return IntersectionArray::validate(b, c);
}

long long order(const IntersectionArray& arr) { return arr.order(); }

}  // namespace resdist
