#include <algorithm>

#include "fanolink/checked.hpp"
#include "fanolink/error.hpp"

namespace fanolink {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DegreeError: return "DegreeError";
    case ErrorCode::MissingLinkContext: return "MissingLinkContext";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ConstantInputs: return "ConstantInputs";
    case ErrorCode::ZeroResultant: return "ZeroResultant";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::NonIntegralClass: return "NonIntegralClass";
    case ErrorCode::NonUnimodular: return "NonUnimodular";
    case ErrorCode::NonIntegralE3: return "NonIntegralE3";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::CatalogInconsistent: return "CatalogInconsistent";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::UnboundedSearch: return "UnboundedSearch";
    case ErrorCode::TargetMismatch: return "TargetMismatch";
    case ErrorCode::IncidenceOutOfRange: return "IncidenceOutOfRange";
    case ErrorCode::NotDetailed: return "NotDetailed";
    case ErrorCode::UnknownLink: return "UnknownLink";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Wide isqrt(Wide n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative value");
  if (n < 2) return n;
  // Newton iteration on integers, starting above the root.
  Wide x = n;
  Wide y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

std::string to_string_wide(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  std::string digits;
  // Work with negative remainders so INT128_MIN does not overflow.
  while (v != 0) {
    const int digit = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -digit : digit)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace fanolink
