#include <gtest/gtest.h>

#include <random>

#include "fanolink/divisor_expr.hpp"
#include "fanolink/error.hpp"
#include "fanolink/link_records.hpp"

using namespace fanolink;

namespace {

Int eval(std::string_view text, Int d, Int g, std::optional<LinkFrame> link = std::nullopt) {
  return evaluate(*parse_divisor_expr(text), {BlowupGeometry::make(d, g), link});
}

ErrorCode code_of(std::string_view text, std::optional<LinkFrame> link = std::nullopt) {
  try {
    eval(text, 5, 1, link);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(Expr, ReferenceValues) {
  EXPECT_EQ(eval("(5H-2E)^2*(3H-E)", 5, 1), -5);
  EXPECT_EQ(eval("(3H-E)^3", 4, 0), 5);
  EXPECT_EQ(eval("(5H-2E)^3", 5, 1), -15);
  EXPECT_EQ(eval("E^3", 4, 0), -14);
  EXPECT_EQ(eval("H^3", 9, 3), 1);
}

TEST(Expr, LinkAtoms) {
  const auto l4 = find_link("L.4").frame();
  EXPECT_EQ(eval("F^2*H_Z", 5, 1, l4), -5);
  EXPECT_EQ(eval("H_Z^3", 5, 1, l4), 2);
  EXPECT_EQ(code_of("F^3"), ErrorCode::MissingLinkContext);
}

TEST(Expr, Arithmetic) {
  EXPECT_EQ(eval("2H^3 + 3 * H*H*H", 4, 0), 5);
  EXPECT_EQ(eval("-E^3", 4, 0), 14);
  EXPECT_EQ(eval("H*E^2 - E*E*H", 4, 0), 0);
  EXPECT_EQ(eval("(H+E)^3", 4, 0), 1 + 3 * -4 + -14);
  EXPECT_EQ(eval("2*(H-E)^3", 4, 0), 6);
}

TEST(Expr, DegreeErrors) {
  EXPECT_EQ(code_of("(3H-E)^2"), ErrorCode::DegreeError);
  EXPECT_EQ(code_of("H^3 + H^2"), ErrorCode::DegreeError);
  EXPECT_EQ(code_of("H^2*H^2"), ErrorCode::DegreeError);
  EXPECT_EQ(code_of("7"), ErrorCode::DegreeError);
}

TEST(Expr, SyntaxErrorsCarryPosition) {
  const std::pair<const char*, std::size_t> bad[] = {{"(3H-E", 5}, {"H^4", 2}, {"3H+", 3}, {"X^3", 0}, {"H^^3", 2}};
  for (auto [text, pos] : bad) {
    try {
      parse_divisor_expr(text);
      ADD_FAILURE() << text;
    } catch (const SyntaxError& e) {
      EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
      EXPECT_EQ(e.position(), pos) << text;
    }
  }
  EXPECT_THROW(parse_divisor_expr(std::string(kMaxExprLength + 1, 'H')), SyntaxError);
}

TEST(Expr, PrinterRoundTrip) {
  const char* samples[] = {"(5H-2E)^2*(3H-E)", "2H^3 + 3 * H*H*H", "-E^3", "(H+E)^3", "H*(H-(E-H))*E",
                           "2*(H-E)^3",         "(H)^3",            "H_Z*F*H"};
  const auto l4 = find_link("L.4").frame();
  for (const char* s : samples) {
    const auto first = parse_divisor_expr(s);
    const std::string printed = to_string(*first);
    const auto second = parse_divisor_expr(printed);
    EXPECT_EQ(to_string(*second), printed) << s;
    EXPECT_EQ(evaluate(*first, {BlowupGeometry::make(5, 1), l4}),
              evaluate(*second, {BlowupGeometry::make(5, 1), l4}))
        << s << " -> " << printed;
  }
  EXPECT_EQ(to_string(*parse_divisor_expr("((5H)-(2E))^2*(3H-E)")), "(5H-2E)^2*(3H-E)");
}

TEST(Expr, RandomRoundTrip) {
  std::mt19937 rng(3);
  const char* atoms[] = {"H", "E", "2H", "(H-E)", "(3H-E)"};
  for (int i = 0; i < 300; ++i) {
    std::string s;
    for (int term = 0; term < 3; ++term) {
      if (term) s += rng() % 2 ? "+" : "-";
      s += atoms[rng() % 5];
      s += "*";
      s += atoms[rng() % 5];
      s += "*";
      s += atoms[rng() % 5];
    }
    const auto a = parse_divisor_expr(s);
    const auto b = parse_divisor_expr(to_string(*a));
    EXPECT_EQ(eval(s, 5, 1), evaluate(*b, {BlowupGeometry::make(5, 1), std::nullopt})) << s;
  }
}
