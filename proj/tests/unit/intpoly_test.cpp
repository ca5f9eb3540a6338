#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "fanolink/error.hpp"
#include "fanolink/intpoly.hpp"
#include "fanolink/report.hpp"

using namespace fanolink;

namespace {

IntPoly cubic_d0(Int d0) { return {-d0, 0, 0, 1}; }
IntPoly cubic_g0(Int g0) { return {1 - g0, 0, -2, 1}; }

}  // namespace

TEST(IntPoly, NormalizesTrailingZeros) {
  IntPoly p{3, 0, 0};
  EXPECT_EQ(p.degree(), 0);
  EXPECT_TRUE(IntPoly{}.is_zero());
  EXPECT_EQ(IntPoly{}.degree(), -1);
  EXPECT_EQ(IntPoly({1, 2}) - IntPoly({1, 2}), IntPoly{});
}

TEST(IntPoly, ProductMatchesHandExpansion) {
  // (2x^2 + 4x - 11)(x^3 - 10)
  const IntPoly prod = IntPoly{-11, 4, 2} * cubic_d0(10);
  EXPECT_EQ(prod, (IntPoly{110, -40, -20, -11, 4, 2}));
  EXPECT_EQ(to_string(prod), "2n^5+4n^4-11n^3-20n^2-40n+110");
}

TEST(IntPoly, EvalAgreesWithHorner) {
  const IntPoly p{7, -3, 0, 2};
  for (Wide x = -20; x <= 20; ++x) EXPECT_EQ(p.eval(x), oracle::eval({7, -3, 0, 2}, x));
}

TEST(Resultant, SmallVectors) {
  EXPECT_EQ(resultant({-1, 0, 1}, {-4, 0, 1}), 9);
  EXPECT_EQ(resultant({-1, 1}, {-1, 1}), 0);
  EXPECT_THROW(resultant(IntPoly::constant(2), IntPoly::constant(3)), Error);
  EXPECT_THROW(resultant(IntPoly{}, IntPoly{1, 1}), Error);
}

TEST(Resultant, CatalogValuesMatchCofactorExpansion) {
  const std::pair<Int, Int> rows[] = {{10, 6}, {12, 7}, {16, 9}, {18, 10}, {22, 12},
                                      {4, 1},  {5, 1},  {2, 0},  {1, 0}};
  for (auto [d0, g0] : rows) {
    EXPECT_EQ(resultant(cubic_d0(d0), cubic_g0(g0)), oracle::condition_resultant(d0, g0))
        << d0 << "," << g0;
  }
  // Frozen after the cross-check above.
  EXPECT_EQ(resultant(cubic_d0(10), cubic_g0(6)), -675);
  EXPECT_EQ(resultant(cubic_d0(22), cubic_g0(12)), -2541);
  EXPECT_EQ(resultant(cubic_d0(1), cubic_g0(0)), 0);
}

TEST(Resultant, VanishesExactlyOnSharedRoots) {
  // (x - r)(x - s) against (x - t)(x - u), roots in a small box.
  for (Int r = -3; r <= 3; ++r)
    for (Int s = -3; s <= 3; ++s)
      for (Int t = -3; t <= 3; ++t) {
        const IntPoly p = IntPoly{-r, 1} * IntPoly{-s, 1};
        const IntPoly q = IntPoly{-t, 1} * IntPoly{-5, 1};
        const bool shared = r == t || s == t || r == 5 || s == 5;
        EXPECT_EQ(resultant(p, q) == 0, shared);
      }
}

TEST(Resultant, RandomCubicsMatchOracle) {
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<Wide>(static_cast<std::int64_t>(state % 41) - 20);
  };
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Wide> p{next(), next(), next(), 1 + (next() & 3)};
    std::vector<Wide> q{next(), next(), 1 + (next() & 3)};
    std::vector<oracle::i128> pd(p.rbegin(), p.rend()), qd(q.rbegin(), q.rend());
    EXPECT_EQ(resultant(IntPoly(p), IntPoly(q)), oracle::sylvester_resultant(pd, qd));
  }
}

TEST(Resultant, OverflowIsReported) {
  const Wide big = Wide{1} << 62;
  IntPoly p{big, big, big, big};
  EXPECT_THROW(
      {
        for (int i = 0; i < 4; ++i) p = p * p;
      },
      Error);
}

TEST(Combo, KnownVerdicts) {
  EXPECT_EQ(verify_combo({-2, 0, 1}, {-4, 0, 0, 1}, {2, 2, 1}, {0, 0, -2, 1}, 8).kind, ComboKind::Exact);
  const auto off = verify_combo({-2, 0, 1}, {-4, 0, 0, 1}, {2, 2, 1}, {0, 0, -2, 1}, -8);
  EXPECT_EQ(off.kind, ComboKind::ExactUpToSign);
  const auto bad = verify_combo({-2, 0, 1}, {-4, 0, 0, 1}, {2, 2, 1}, {0, 0, -2, 1}, 9);
  EXPECT_EQ(bad.kind, ComboKind::Fails);
  EXPECT_EQ(bad.residual, IntPoly::constant(-1));
}

// Each identity checked pointwise: a degree <= 5 polynomial that
// agrees with a constant at 12 points is that constant.
TEST(Combo, AuditAgreesWithPointwiseEvaluation) {
  for (const auto& row : audit_combos()) {
    const auto& id = row.identity;
    auto asc = [](const IntPoly& p) { return std::vector<oracle::i128>(p.coeffs().begin(), p.coeffs().end()); };
    bool pointwise_exact = true, pointwise_negated = true;
    for (oracle::i128 x = -6; x < 6; ++x) {
      const auto value = oracle::eval(asc(id.u), x) * oracle::eval(asc(id.p), x) -
                         oracle::eval(asc(id.v), x) * oracle::eval(asc(id.q), x);
      pointwise_exact &= value == oracle::eval(asc(id.claimed), x);
      pointwise_negated &= value == -oracle::eval(asc(id.claimed), x);
    }
    const ComboKind expected = pointwise_exact     ? ComboKind::Exact
                               : pointwise_negated ? ComboKind::ExactUpToSign
                                                   : ComboKind::Fails;
    EXPECT_EQ(row.verdict.kind, expected) << id.label;
    EXPECT_EQ(row.flagged, expected != ComboKind::Exact) << id.label;
  }
}

TEST(Combo, StatedConstants) {
  // Stated constant -> what the cofactors actually produce.
  const std::pair<const char*, Wide> printed[] = {{"135", 135}, {"156", 156}, {"96", 96}, {"414", 414},
                                                  {"464", 462}, {"8", 8},     {"15", 15}, {"5", 5}};
  const auto rows = audit_combos();
  for (auto [label, actual] : printed) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.identity.label == label; });
    ASSERT_NE(it, rows.end()) << label;
    EXPECT_EQ(it->verdict.value, IntPoly::constant(actual)) << label;
  }
}

TEST(Combo, LinearIdentityHoldsOnlyAsDifference) {
  const IntPoly n = IntPoly::x();
  const IntPoly diff = (n - IntPoly::constant(2)) * cubic_d0(1) - n * cubic_g0(0);
  EXPECT_EQ(diff, (IntPoly{2, -2}));
  const auto rows = audit_combos();
  EXPECT_EQ(rows[8].verdict.kind, ComboKind::Fails);
  EXPECT_EQ(rows[9].verdict.kind, ComboKind::ExactUpToSign);
}
