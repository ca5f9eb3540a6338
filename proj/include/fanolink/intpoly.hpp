#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fanolink/checked.hpp"

namespace fanolink {

/// Univariate polynomial with exact integer coefficients, ascending degree.
///
/// The zero polynomial is the empty coefficient sequence and has degree -1.
/// Arithmetic is checked; overflow throws `ErrorCode::Overflow`.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Wide> ascending);
  explicit IntPoly(std::vector<Wide> ascending);

  static IntPoly constant(Wide c);
  static IntPoly monomial(Wide c, int power);
  static IntPoly x() { return monomial(1, 1); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Coefficient of x^i (zero beyond the degree).
  Wide coeff(int i) const noexcept;
  Wide leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::span<const Wide> coeffs() const noexcept { return coeffs_; }

  Wide eval(Wide at) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();
  std::vector<Wide> coeffs_;
};

IntPoly poly_add(const IntPoly& p, const IntPoly& q);
IntPoly poly_sub(const IntPoly& p, const IntPoly& q);
IntPoly poly_mul(const IntPoly& p, const IntPoly& q);
IntPoly poly_neg(const IntPoly& p);

inline IntPoly operator+(const IntPoly& p, const IntPoly& q) { return poly_add(p, q); }
inline IntPoly operator-(const IntPoly& p, const IntPoly& q) { return poly_sub(p, q); }
inline IntPoly operator*(const IntPoly& p, const IntPoly& q) { return poly_mul(p, q); }
inline IntPoly operator-(const IntPoly& p) { return poly_neg(p); }

/// Determinant of the Sylvester matrix of p and q, via fraction-free
/// (Bareiss) elimination. Equals lc(p)^deg q * prod q(root of p).
///
/// Throws ConstantInputs when both are constant, InvalidArgument when either
/// is zero.
Wide resultant(const IntPoly& p, const IntPoly& q);

/// The (deg p + deg q) square Sylvester matrix, row-major.
std::vector<std::vector<Wide>> sylvester_matrix(const IntPoly& p, const IntPoly& q);

enum class ComboKind { Exact, ExactUpToSign, Fails };

struct ComboVerdict {
  ComboKind kind;
  IntPoly value;     // u*p - v*q
  IntPoly residual;  // value - claimed; zero unless kind == Fails
};

/// Checks a Bezout-style identity u*p - v*q == claimed.
ComboVerdict verify_combo(const IntPoly& u, const IntPoly& p, const IntPoly& v,
                          const IntPoly& q, const IntPoly& claimed);

inline ComboVerdict verify_combo(const IntPoly& u, const IntPoly& p, const IntPoly& v,
                                 const IntPoly& q, Wide claimed) {
  return verify_combo(u, p, v, q, IntPoly::constant(claimed));
}

std::string_view to_string(ComboKind kind) noexcept;

/// Human-readable form, highest degree first, e.g. "2n^2+4n-11".
std::string to_string(const IntPoly& p, char var = 'n');

}  // namespace fanolink
