#pragma once

// Divisor and curve classes on the blow-up Z of P^3 along a smooth curve of
// degree d and genus g. Pic(Z) has basis (H, E); the triple form is
//   H^3 = 1, H^2 E = 0, H E^2 = -d, E^3 = 2 - 2g - 4d.

#include <Eigen/Core>
#include <array>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>

#include "fanolink/checked.hpp"

namespace fanolink {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

template <CheckedInteger Scalar>
struct BlowupGeometryT {
  Scalar d;
  Scalar g;

  /// Throws InvalidGeometry unless d >= 1 and 0 <= g <= (d-1)(d-2)/2.
  static BlowupGeometryT make(Scalar d, Scalar g) {
    if (d < 1 || g < 0) {
      throw Error(ErrorCode::InvalidGeometry, "need d >= 1 and g >= 0");
    }
    const Scalar plane = checked_mul(d - 1, d - 2) / 2;
    if (g > plane) {
      throw Error(ErrorCode::InvalidGeometry,
                  "genus exceeds the plane-curve bound (d-1)(d-2)/2");
    }
    return {d, g};
  }

  Scalar e_cubed() const {
    return checked_sub(checked_sub(Scalar{2}, checked_mul(Scalar{2}, g)),
                       checked_mul(Scalar{4}, d));
  }

  /// Intersection number H^(3-k) E^k.
  Scalar monomial(int e_power) const {
    switch (e_power) {
      case 0: return 1;
      case 1: return 0;
      case 2: return -d;
      default: return e_cubed();
    }
  }
};

/// hH + eE.
template <CheckedInteger Scalar>
struct DivisorClassT {
  Vec2<Scalar> coeffs{Scalar{0}, Scalar{0}};

  DivisorClassT() = default;
  DivisorClassT(Scalar h, Scalar e) : coeffs(h, e) {}

  static DivisorClassT H() { return {1, 0}; }
  static DivisorClassT E() { return {0, 1}; }

  Scalar h() const { return coeffs(0); }
  Scalar e() const { return coeffs(1); }

  friend bool operator==(const DivisorClassT& a, const DivisorClassT& b) {
    return a.coeffs == b.coeffs;
  }
  friend DivisorClassT operator+(const DivisorClassT& a, const DivisorClassT& b) {
    return {checked_add(a.h(), b.h()), checked_add(a.e(), b.e())};
  }
  friend DivisorClassT operator-(const DivisorClassT& a, const DivisorClassT& b) {
    return {checked_sub(a.h(), b.h()), checked_sub(a.e(), b.e())};
  }
  friend DivisorClassT operator*(Scalar k, const DivisorClassT& a) {
    return {checked_mul(k, a.h()), checked_mul(k, a.e())};
  }
};

template <CheckedInteger Scalar>
std::string to_string(const DivisorClassT<Scalar>& c) {
  auto term = [](Scalar k, const char* atom, bool first) {
    if (k == 0) return std::string{};
    std::string s;
    if (k < 0) s += "-";
    else if (!first) s += "+";
    const Scalar mag = k < 0 ? -k : k;
    if (mag != 1) s += to_string_wide(mag);
    return s + atom;
  };
  std::string out = term(c.h(), "H", true);
  out += term(c.e(), "E", out.empty());
  return out.empty() ? "0" : out;
}

template <CheckedInteger Scalar>
std::ostream& operator<<(std::ostream& os, const DivisorClassT<Scalar>& c) {
  return os << to_string(c);
}

/// Symmetric trilinear intersection product c1 . c2 . c3 on Z.
template <CheckedInteger Scalar>
Scalar triple_product(const DivisorClassT<Scalar>& c1, const DivisorClassT<Scalar>& c2,
                      const DivisorClassT<Scalar>& c3,
                      const BlowupGeometryT<Scalar>& geom) {
  const std::array<const DivisorClassT<Scalar>*, 3> cs{&c1, &c2, &c3};
  Scalar total = 0;
  for (int mask = 0; mask < 8; ++mask) {
    Scalar coef = 1;
    int e_power = 0;
    for (int k = 0; k < 3; ++k) {
      const bool pick_e = (mask >> k) & 1;
      coef = checked_mul(coef, pick_e ? cs[k]->e() : cs[k]->h());
      e_power += pick_e;
    }
    total = checked_add(total, checked_mul(coef, geom.monomial(e_power)));
  }
  return total;
}

template <CheckedInteger Scalar>
Scalar cube(const DivisorClassT<Scalar>& c, const BlowupGeometryT<Scalar>& geom) {
  return triple_product(c, c, c, geom);
}

/// Class of the exceptional divisor F of the second contraction q : Z -> X
/// for a link given by |nH - mE| onto a Fano 3-fold of index r:
///   a_F F = K_Z - q^*K_X = (rn - 4)H + (1 - rm)E.
/// a_F is 1 when q blows down to a curve, 2 when q blows down to a point.
template <CheckedInteger Scalar>
DivisorClassT<Scalar> q_exceptional_class(Scalar n, Scalar m, Scalar r, Scalar a_f) {
  if (!(1 <= m && m < n && n < checked_mul(Scalar{4}, m))) {
    throw Error(ErrorCode::InvalidArgument, "need 1 <= m < n < 4m");
  }
  if (r < 1 || r > 4) throw Error(ErrorCode::InvalidArgument, "index r must be in 1..4");
  if (a_f != 1 && a_f != 2) throw Error(ErrorCode::InvalidArgument, "a_F must be 1 or 2");
  const Scalar h = checked_sub(checked_mul(r, n), Scalar{4});
  const Scalar e = checked_sub(Scalar{1}, checked_mul(r, m));
  if (h % a_f != 0 || e % a_f != 0) {
    throw Error(ErrorCode::NonIntegralClass,
                "(rn-4)H + (1-rm)E is not divisible by a_F");
  }
  return {h / a_f, e / a_f};
}

/// The unique a_F in {1, 2} for which the class above is integral and
/// primitive, if there is exactly one. A heuristic; callers record a_F.
template <CheckedInteger Scalar>
std::optional<Scalar> suggest_discrepancy(Scalar n, Scalar m, Scalar r) {
  std::optional<Scalar> found;
  for (Scalar a : {Scalar{1}, Scalar{2}}) {
    try {
      const auto f = q_exceptional_class(n, m, r, a);
      const Scalar h = f.h() < 0 ? -f.h() : f.h();
      const Scalar e = f.e() < 0 ? -f.e() : f.e();
      if (std::gcd(h, e) != 1) continue;
      if (found) return std::nullopt;
      found = a;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NonIntegralClass) throw;
    }
  }
  return found;
}

/// Data of a link needed to move between the bases (H, E) and (H_Z, F),
/// where H_Z = nH - mE.
template <CheckedInteger Scalar>
struct LinkFrameT {
  Scalar n;
  Scalar m;
  DivisorClassT<Scalar> f;

  DivisorClassT<Scalar> h_z() const { return {n, -m}; }
};

template <CheckedInteger Scalar>
struct BasisChangeT {
  /// Rows: H_Z and F in terms of (H, E).
  Mat2<Scalar> forward;
  /// Rows: H and E in terms of (H_Z, F).
  Mat2<Scalar> inverse;
};

template <CheckedInteger Scalar>
BasisChangeT<Scalar> basis_change(const LinkFrameT<Scalar>& link) {
  Mat2<Scalar> fwd;
  fwd << link.n, -link.m, link.f.h(), link.f.e();
  const Scalar det = checked_sub(checked_mul(fwd(0, 0), fwd(1, 1)),
                                 checked_mul(fwd(0, 1), fwd(1, 0)));
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::NonUnimodular,
                "change of basis has determinant " + to_string_wide(det));
  }
  Mat2<Scalar> inv;
  // adjugate / det, with det = +-1
  inv << fwd(1, 1) * det, -fwd(0, 1) * det, -fwd(1, 0) * det, fwd(0, 0) * det;
  return {fwd, inv};
}

/// Which divisor basis a curve functional is measured against.
enum class Basis { Blowup /* (H, E) */, Target /* (H_Z, F) */ };

constexpr Basis other(Basis b) {
  return b == Basis::Blowup ? Basis::Target : Basis::Blowup;
}

/// Intersection degrees of a curve class against the two basis divisors.
/// The basis is part of the type, so mixing bases does not compile.
template <Basis B, CheckedInteger Scalar>
struct CurveFunctionalT {
  Vec2<Scalar> degrees{Scalar{0}, Scalar{0}};

  CurveFunctionalT() = default;
  CurveFunctionalT(Scalar first, Scalar second) : degrees(first, second) {}

  Scalar first() const { return degrees(0); }
  Scalar second() const { return degrees(1); }

  friend bool operator==(const CurveFunctionalT& a, const CurveFunctionalT& b) {
    return a.degrees == b.degrees;
  }
};

/// gamma . D for a curve measured in (H, E).
template <CheckedInteger Scalar>
Scalar intersect(const CurveFunctionalT<Basis::Blowup, Scalar>& curve,
                 const DivisorClassT<Scalar>& divisor) {
  return checked_add(checked_mul(curve.first(), divisor.h()),
                     checked_mul(curve.second(), divisor.e()));
}

namespace detail {
template <CheckedInteger Scalar>
Vec2<Scalar> apply(const Mat2<Scalar>& m, const Vec2<Scalar>& v) {
  return {checked_add(checked_mul(m(0, 0), v(0)), checked_mul(m(0, 1), v(1))),
          checked_add(checked_mul(m(1, 0), v(0)), checked_mul(m(1, 1), v(1)))};
}
}  // namespace detail

/// (gamma.H_Z, gamma.F) -> (gamma.H, gamma.E)
template <CheckedInteger Scalar>
CurveFunctionalT<Basis::Blowup, Scalar> curve_degrees(
    const CurveFunctionalT<Basis::Target, Scalar>& fn, const LinkFrameT<Scalar>& link) {
  const auto v = detail::apply(basis_change(link).inverse, fn.degrees);
  return {v(0), v(1)};
}

/// (gamma.H, gamma.E) -> (gamma.H_Z, gamma.F)
template <CheckedInteger Scalar>
CurveFunctionalT<Basis::Target, Scalar> curve_degrees(
    const CurveFunctionalT<Basis::Blowup, Scalar>& fn, const LinkFrameT<Scalar>& link) {
  const auto v = detail::apply(basis_change(link).forward, fn.degrees);
  return {v(0), v(1)};
}

using BlowupGeometry = BlowupGeometryT<Int>;
using DivisorClass = DivisorClassT<Int>;
using LinkFrame = LinkFrameT<Int>;
using BasisChange = BasisChangeT<Int>;
using BlowupCurve = CurveFunctionalT<Basis::Blowup, Int>;
using TargetCurve = CurveFunctionalT<Basis::Target, Int>;

}  // namespace fanolink
