#include <gtest/gtest.h>

#include "resdist/error.hpp"
#include "resdist/families.hpp"
#include "resdist/resistance.hpp"

namespace resdist {
namespace {

IntersectionArray arr_of(std::vector<long long> b, std::vector<long long> c) {
  return validate_intersection_array(b, c);
}

const IntersectionArray kBiggsSmith = arr_of({3, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 3});
const IntersectionArray kCube = arr_of({3, 2, 1}, {1, 2, 3});
const IntersectionArray kC6 = arr_of({2, 1, 1}, {1, 1, 2});
const IntersectionArray kK2 = arr_of({1}, {1});

TEST(FirstStratum, Examples) {
  EXPECT_EQ(first_stratum_resistance(kBiggsSmith), Rational(101, 153));
  EXPECT_EQ(first_stratum_resistance(kK2), Rational(1));
  EXPECT_EQ(first_stratum_resistance(kC6), Rational(5, 6));
}

TEST(Increment, Examples) {
  EXPECT_EQ(resistance_increment(kBiggsSmith, 1), Rational(49, 153));
  EXPECT_EQ(resistance_increment(kCube, 1), Rational(1, 6));
  EXPECT_EQ(resistance_increment(kC6, 2), Rational(1, 6));
}

TEST(Increment, OutOfRange) {
  for (int m : {0, 3, -1}) {
    try {
      resistance_increment(kCube, m);
      ADD_FAILURE() << m;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::StratumOutOfRange);
    }
  }
  EXPECT_THROW(resistance_increment(kK2, 1), Error);
}

TEST(Table, M22) {
  const auto t = resistance_table(arr_of({7, 6, 4, 4}, {1, 1, 1, 6}));
  const std::vector<Rational> expect{Rational(47, 165), Rational(164, 495), Rational(1183, 3465),
                                     Rational(113, 330)};
  EXPECT_EQ(t.resistances, expect);
}

TEST(Table, SquareAndFoster) {
  EXPECT_EQ(resistance_table(arr_of({2, 1}, {1, 2})).resistances,
            (std::vector<Rational>{Rational(3, 4), Rational(1)}));
  const auto foster = resistance_table(arr_of({3, 2, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 2, 2, 2, 3}));
  EXPECT_EQ(foster.resistance(8), Rational(675, 540));
  EXPECT_EQ(foster.resistance(8).str(), "5/4");
}

TEST(Table, SingleStratum) {
  const auto t = resistance_table(kK2);
  EXPECT_EQ(t.resistances.size(), 1u);
  EXPECT_TRUE(t.increments.empty());
  EXPECT_THROW(t.increment(1), Error);
}

TEST(CommuteTime, Examples) {
  EXPECT_EQ(commute_time(kCube, 1), Rational(14));
  EXPECT_EQ(commute_time(kK2, 1), Rational(2));
  EXPECT_EQ(commute_time(arr_of({2, 1}, {1, 2}), 2), Rational(8));
  EXPECT_THROW(commute_time(kCube, 4), Error);
  EXPECT_THROW(commute_time(kCube, 0), Error);
}

TEST(Properties, CatalogWide) {
  for (const auto& spec : catalog()) {
    SCOPED_TRACE(spec.label());
    const auto arr = family_array(spec);
    const auto t = resistance_table(arr);
    const Rational n(arr.order());
    const Rational k(arr.valency());
    // Foster-sum identity
    EXPECT_EQ(n * k / 2 * t.resistance(1), n - 1);
    for (int m = 1; m < arr.diameter(); ++m) {
      EXPECT_GT(t.resistance(m + 1), t.resistance(m));
      EXPECT_EQ(t.resistance(m + 1) - t.resistance(m), t.increment(m));
    }
    for (int m = 1; m <= arr.diameter(); ++m) {
      EXPECT_EQ(t.commute_time(m) / t.resistance(m), n * k);
    }
  }
}

TEST(Properties, EvenCycleClosedForm) {
  for (long long n = 4; n <= 60; n += 2) {
    const auto t = resistance_table(family_array({"cycle", {{"N", n}}}));
    for (long long l = 1; l <= n / 2; ++l) {
      EXPECT_EQ(t.resistance(static_cast<int>(l)), Rational(l * (n - l), n)) << n << ' ' << l;
    }
  }
}

}  // namespace
}  // namespace resdist
