#include "fanolink/intpoly.hpp"

#include <algorithm>
#include <utility>

namespace fanolink {

IntPoly::IntPoly(std::initializer_list<Wide> ascending) : coeffs_(ascending) {
  normalize();
}

IntPoly::IntPoly(std::vector<Wide> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

IntPoly IntPoly::constant(Wide c) { return IntPoly{c}; }

IntPoly IntPoly::monomial(Wide c, int power) {
  if (power < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  std::vector<Wide> cs(static_cast<std::size_t>(power) + 1, 0);
  cs.back() = c;
  return IntPoly(std::move(cs));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Wide IntPoly::coeff(int i) const noexcept {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Wide IntPoly::eval(Wide at) const {
  Wide acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, at), *it);
  }
  return acc;
}

IntPoly poly_add(const IntPoly& p, const IntPoly& q) {
  const int top = std::max(p.degree(), q.degree());
  std::vector<Wide> out(static_cast<std::size_t>(top + 1), 0);
  for (int i = 0; i <= top; ++i) {
    out[static_cast<std::size_t>(i)] = checked_add(p.coeff(i), q.coeff(i));
  }
  return IntPoly(std::move(out));
}

IntPoly poly_neg(const IntPoly& p) {
  std::vector<Wide> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : out) c = checked_neg(c);
  return IntPoly(std::move(out));
}

IntPoly poly_sub(const IntPoly& p, const IntPoly& q) { return poly_add(p, poly_neg(q)); }

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Wide> out(static_cast<std::size_t>(p.degree() + q.degree() + 1), 0);
  for (int i = 0; i <= p.degree(); ++i) {
    for (int j = 0; j <= q.degree(); ++j) {
      auto& slot = out[static_cast<std::size_t>(i + j)];
      slot = checked_add(slot, checked_mul(p.coeff(i), q.coeff(j)));
    }
  }
  return IntPoly(std::move(out));
}

std::vector<std::vector<Wide>> sylvester_matrix(const IntPoly& p, const IntPoly& q) {
  const int a = p.degree();
  const int b = q.degree();
  const auto size = static_cast<std::size_t>(a + b);
  std::vector<std::vector<Wide>> m(size, std::vector<Wide>(size, 0));
  // b shifted copies of p, then a shifted copies of q; coefficients descending.
  for (int row = 0; row < b; ++row) {
    for (int k = 0; k <= a; ++k) {
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = p.coeff(a - k);
    }
  }
  for (int row = 0; row < a; ++row) {
    for (int k = 0; k <= b; ++k) {
      m[static_cast<std::size_t>(b + row)][static_cast<std::size_t>(row + k)] = q.coeff(b - k);
    }
  }
  return m;
}

Wide resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "resultant of the zero polynomial");
  }
  if (p.is_constant() && q.is_constant()) {
    throw Error(ErrorCode::ConstantInputs, "resultant needs a nonconstant input");
  }
  auto m = sylvester_matrix(p, q);
  const std::size_t n = m.size();
  Wide sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k] == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(m[k], m[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Wide num = checked_sub(checked_mul(m[i][j], m[k][k]),
                                     checked_mul(m[i][k], m[k][j]));
        // Sylvester's identity guarantees exact division.
        m[i][j] = num / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return checked_mul(sign, m[n - 1][n - 1]);
}

ComboVerdict verify_combo(const IntPoly& u, const IntPoly& p, const IntPoly& v,
                          const IntPoly& q, const IntPoly& claimed) {
  IntPoly value = u * p - v * q;
  if (value == claimed) return {ComboKind::Exact, value, {}};
  if (value == -claimed) return {ComboKind::ExactUpToSign, value, {}};
  IntPoly residual = value - claimed;
  return {ComboKind::Fails, std::move(value), std::move(residual)};
}

std::string_view to_string(ComboKind kind) noexcept {
  switch (kind) {
    case ComboKind::Exact: return "Exact";
    case ComboKind::ExactUpToSign: return "ExactUpToSign";
    case ComboKind::Fails: return "Fails";
  }
  return "?";
}

std::string to_string(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Wide c = p.coeff(i);
    if (c == 0) continue;
    const Wide mag = c < 0 ? -c : c;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (mag != 1 || i == 0) out += to_string_wide(mag);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace fanolink
