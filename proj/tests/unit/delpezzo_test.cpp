#include <gtest/gtest.h>

#include <numeric>

#include "../support/oracles.hpp"
#include "fanolink/delpezzo.hpp"
#include "fanolink/error.hpp"

using namespace fanolink;

namespace {

std::set<std::pair<Int, std::vector<Int>>> as_set(const std::vector<DPClass>& v, Int a_max) {
  std::set<std::pair<Int, std::vector<Int>>> out;
  for (const auto& c : v) {
    if (c.a <= a_max) out.insert({c.a, c.b});
  }
  return out;
}

}  // namespace

TEST(DelPezzo, ConicsOnFourPoints) {
  const auto got = enumerate_classes(4, -2, 0);
  EXPECT_EQ(got, (std::vector<DPClass>{{1, {1, 0, 0, 0}}, {2, {1, 1, 1, 1}}}));
  EXPECT_EQ(as_set(got, 12), oracle::brute_force_dp(4, -2, 0, 12, 12));
}

TEST(DelPezzo, FivePointsWithBoundedMultiplicity) {
  DPConstraints c;
  c.bmax = 2;
  const auto got = enumerate_classes(5, -5, 5, c);
  EXPECT_EQ(got, (std::vector<DPClass>{{3, {1, 1, 1, 1, 0}}, {4, {2, 2, 1, 1, 1}}, {5, {2, 2, 2, 2, 2}}}));
  EXPECT_EQ(as_set(got, 12), oracle::brute_force_dp(5, -5, 5, 12, 2));
}

TEST(DelPezzo, OracleSweep) {
  for (int k = 1; k <= 5; ++k)
    for (Int kc = -6; kc <= -1; ++kc)
      for (Int c2 = -1; c2 <= 4; ++c2) {
        const auto range = cauchy_schwarz_range(k, kc, c2);
        const auto got = enumerate_classes(k, kc, c2);
        const auto want = oracle::brute_force_dp(k, kc, c2, 12, 12);
        EXPECT_EQ(as_set(got, 12), want) << k << " " << kc << " " << c2;
        // Nothing the oracle finds lies outside the Cauchy-Schwarz range.
        for (const auto& [a, b] : want) {
          ASSERT_TRUE(range.has_value());
          EXPECT_GE(a, range->first);
          EXPECT_LE(a, range->second);
        }
      }
}

TEST(DelPezzo, LineCounts) {
  DPConstraints c;
  c.allow_exceptional = true;
  const std::pair<int, Int> expected[] = {{3, 6}, {4, 10}, {5, 16}, {6, 27}, {7, 56}, {8, 240}};
  for (auto [k, lines] : expected) {
    const auto classes = enumerate_classes(k, -1, -1, c);
    const Int total = std::accumulate(classes.begin(), classes.end(), Int{0},
                                      [](Int acc, const DPClass& x) { return acc + orbit_size(x); });
    EXPECT_EQ(total, lines) << k;
  }
}

TEST(DelPezzo, Genus) {
  EXPECT_EQ(adjunction_genus(-2, 0), 0);
  EXPECT_EQ(adjunction_genus(-3, 3), 1);
  EXPECT_THROW(adjunction_genus(-2, 1), Error);
}

TEST(DelPezzo, Errors) {
  EXPECT_THROW(enumerate_classes(9, -1, -1), Error);
  EXPECT_THROW(enumerate_classes(0, -1, -1), Error);
  EXPECT_THROW(enumerate_classes(10, -1, -1), Error);
}

TEST(DelPezzo, Printing) { EXPECT_EQ(to_string(DPClass{4, {2, 2, 1, 1, 1}}), "(4;2,2,1,1,1)"); }
