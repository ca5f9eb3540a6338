#pragma once

// Intersection-number expressions over divisor classes on Z, e.g.
// "(5H-2E)^2*(3H-E)". Grammar:
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := atom ['^' INT]
//            | INT [atom ['^' INT]]
//            | '(' expr ')' ['^' INT]
//   atom    := 'H' | 'E' | 'H_Z' | 'F'
//
// Exponents are integer literals in 0..3. Only products of total degree 3
// evaluate to a number.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "fanolink/lattice.hpp"

namespace fanolink {

enum class Atom { H, E, HZ, F };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct AtomNode {
  Atom atom;
};
struct LiteralNode {
  Int value;
};
struct NegateNode {
  ExprPtr operand;
};
struct BinaryNode {
  char op;  // '+', '-', '*'
  ExprPtr lhs;
  ExprPtr rhs;
  bool implicit = false;  // "5H" rather than "5*H"
};
struct PowerNode {
  ExprPtr base;
  int exponent;
};

struct Expr {
  std::variant<AtomNode, LiteralNode, NegateNode, BinaryNode, PowerNode> node;
  std::size_t position = 0;
};

inline constexpr std::size_t kMaxExprLength = 4096;

/// Throws SyntaxError (with position) on malformed input or input longer
/// than kMaxExprLength.
ExprPtr parse_divisor_expr(std::string_view text);

struct EvalContext {
  BlowupGeometry geometry;
  /// Needed for H_Z and F.
  std::optional<LinkFrame> link;
};

/// Throws DegreeError unless the expression is homogeneous of degree 3, and
/// MissingLinkContext for H_Z / F without a link.
Int evaluate(const Expr& expr, const EvalContext& context);

/// Canonical text with minimal parentheses; parses back to an equal value.
std::string to_string(const Expr& expr);

}  // namespace fanolink
