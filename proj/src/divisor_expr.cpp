#include "fanolink/divisor_expr.hpp"

#include <array>
#include <cctype>

namespace fanolink {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    if (text_.size() > kMaxExprLength) {
      throw SyntaxError(kMaxExprLength, "expression longer than " + std::to_string(kMaxExprLength) + " characters");
    }
    auto e = expr();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr make(std::size_t at, auto node) {
    auto e = std::make_unique<Expr>();
    e->node = std::move(node);
    e->position = at;
    return e;
  }

  ExprPtr expr() {
    skip_space();
    const std::size_t start = pos_;
    ExprPtr lhs;
    if (accept('-')) {
      lhs = make(start, NegateNode{term()});
    } else {
      lhs = term();
    }
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      char op = 0;
      if (accept('+')) op = '+';
      else if (accept('-')) op = '-';
      else break;
      lhs = make(at, BinaryNode{op, std::move(lhs), term()});
    }
    return lhs;
  }

  ExprPtr term() {
    auto lhs = factor();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) break;
      lhs = make(at, BinaryNode{'*', std::move(lhs), factor()});
    }
    return lhs;
  }

  std::optional<Atom> peek_atom() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    switch (text_[pos_]) {
      case 'H':
        return text_.substr(pos_, 3) == "H_Z" ? Atom::HZ : Atom::H;
      case 'E': return Atom::E;
      case 'F': return Atom::F;
      default: return std::nullopt;
    }
  }

  ExprPtr atom_with_power() {
    const std::size_t at = pos_;
    const Atom a = *peek_atom();
    pos_ += a == Atom::HZ ? 3 : 1;
    return maybe_power(make(at, AtomNode{a}));
  }

  ExprPtr maybe_power(ExprPtr base) {
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_space();
    const std::size_t digits_at = pos_;
    const Int value = integer("exponent");
    if (value > 3) throw SyntaxError(digits_at, "exponent must be at most 3");
    return make(at, PowerNode{std::move(base), static_cast<int>(value)});
  }

  Int integer(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    Int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (__builtin_mul_overflow(value, Int{10}, &value) ||
          __builtin_add_overflow(value, Int{text_[pos_] - '0'}, &value)) {
        throw SyntaxError(start, "integer literal too large");
      }
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(start, std::string("expected ") + what);
    return value;
  }

  ExprPtr factor() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    if (peek_atom()) return atom_with_power();
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      auto literal = make(at, LiteralNode{integer("integer")});
      if (!peek_atom()) return literal;
      const std::size_t atom_at = pos_;
      return make(atom_at, BinaryNode{'*', std::move(literal), atom_with_power(), true});
    }
    if (accept('(')) {
      auto inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return maybe_power(std::move(inner));
    }
    throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Homogeneous form sum c[i] H^(degree-i) E^i with degree <= 3.
struct Form {
  int degree = 0;
  std::array<Int, 4> c{};
};

Form add(const Form& a, const Form& b, Int sign, std::size_t at) {
  if (a.degree != b.degree) {
    throw Error(ErrorCode::DegreeError, "sum of terms of degree " + std::to_string(a.degree) +
                                            " and " + std::to_string(b.degree) + " at position " +
                                            std::to_string(at));
  }
  Form out{a.degree, {}};
  for (int i = 0; i <= a.degree; ++i) out.c[i] = checked_add(a.c[i], checked_mul(sign, b.c[i]));
  return out;
}

Form mul(const Form& a, const Form& b, std::size_t at) {
  if (a.degree + b.degree > 3) {
    throw Error(ErrorCode::DegreeError,
                "product of degree " + std::to_string(a.degree + b.degree) +
                    " exceeds 3 at position " + std::to_string(at));
  }
  Form out{a.degree + b.degree, {}};
  for (int i = 0; i <= a.degree; ++i) {
    for (int j = 0; j <= b.degree; ++j) {
      out.c[i + j] = checked_add(out.c[i + j], checked_mul(a.c[i], b.c[j]));
    }
  }
  return out;
}

Form linear(const DivisorClass& d) { return {1, {d.h(), d.e(), 0, 0}}; }

Form eval_form(const Expr& e, const EvalContext& ctx) {
  return std::visit(
      [&](const auto& node) -> Form {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, AtomNode>) {
          switch (node.atom) {
            case Atom::H: return linear(DivisorClass::H());
            case Atom::E: return linear(DivisorClass::E());
            case Atom::HZ:
            case Atom::F:
              if (!ctx.link) {
                throw Error(ErrorCode::MissingLinkContext,
                            "H_Z and F need a link (--link) at position " + std::to_string(e.position));
              }
              return linear(node.atom == Atom::HZ ? ctx.link->h_z() : ctx.link->f);
          }
          return {};
        } else if constexpr (std::is_same_v<T, LiteralNode>) {
          return {0, {node.value, 0, 0, 0}};
        } else if constexpr (std::is_same_v<T, NegateNode>) {
          const Form inner = eval_form(*node.operand, ctx);
          return add(Form{inner.degree, {}}, inner, -1, e.position);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          const Form lhs = eval_form(*node.lhs, ctx);
          const Form rhs = eval_form(*node.rhs, ctx);
          if (node.op == '*') return mul(lhs, rhs, e.position);
          return add(lhs, rhs, node.op == '+' ? 1 : -1, e.position);
        } else {
          const Form base = eval_form(*node.base, ctx);
          Form acc{0, {1, 0, 0, 0}};
          for (int k = 0; k < node.exponent; ++k) acc = mul(acc, base, e.position);
          return acc;
        }
      },
      e.node);
}

int precedence(const Expr& e) {
  return std::visit(
      [](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, BinaryNode>) return node.op == '*' ? 2 : 1;
        else if constexpr (std::is_same_v<T, NegateNode>) return 1;
        else if constexpr (std::is_same_v<T, PowerNode>) return 3;
        else return 4;
      },
      e.node);
}

std::string atom_text(Atom a) {
  switch (a) {
    case Atom::H: return "H";
    case Atom::E: return "E";
    case Atom::HZ: return "H_Z";
    case Atom::F: return "F";
  }
  return "?";
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = to_string(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse_divisor_expr(std::string_view text) { return Parser(text).parse(); }

Int evaluate(const Expr& expr, const EvalContext& context) {
  const Form form = eval_form(expr, context);
  if (form.degree != 3) {
    throw Error(ErrorCode::DegreeError,
                "expression has degree " + std::to_string(form.degree) + ", expected 3");
  }
  Int total = 0;
  for (int i = 0; i <= 3; ++i) {
    total = checked_add(total, checked_mul(form.c[i], context.geometry.monomial(i)));
  }
  return total;
}

std::string to_string(const Expr& expr) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, AtomNode>) {
          return atom_text(node.atom);
        } else if constexpr (std::is_same_v<T, LiteralNode>) {
          return std::to_string(node.value);
        } else if constexpr (std::is_same_v<T, NegateNode>) {
          return "-" + wrap(*node.operand, 2);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          if (node.implicit) return to_string(*node.lhs) + to_string(*node.rhs);
          if (node.op == '*') return wrap(*node.lhs, 2) + "*" + wrap(*node.rhs, 3);
          // The right operand of +/- must be a term; the left may be a sum.
          return wrap(*node.lhs, 1) + std::string(1, node.op) + wrap(*node.rhs, 2);
        } else {
          return wrap(*node.base, 4) + "^" + std::to_string(node.exponent);
        }
      },
      expr.node);
}

}  // namespace fanolink
