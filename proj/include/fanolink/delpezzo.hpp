#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanolink/checked.hpp"

namespace fanolink {

/// aL - sum b_i E_i on the blow-up of P^2 at k points, with b sorted
/// nonincreasing (classes are taken up to permuting the points).
struct DPClass {
  Int a = 0;
  std::vector<Int> b;

  Int k_dot() const;        // K.C = -3a + sum b_i
  Int self_intersection() const;  // C^2 = a^2 - sum b_i^2

  friend auto operator<=>(const DPClass&, const DPClass&) = default;
};

struct DPConstraints {
  std::optional<Int> bmax;       // b_i <= bmax
  bool pair_bound = false;       // b_i + b_j <= a for i != j
  bool allow_exceptional = false;  // admit negative b_i
};

/// All canonical classes with K.C = kc and C^2 = c2, in ascending (a, b)
/// order. The search over a is bounded by Cauchy-Schwarz,
/// (3a + kc)^2 <= k (a^2 - c2). Throws UnboundedSearch for k = 9 and
/// InvalidArgument for k outside 1..9.
std::vector<DPClass> enumerate_classes(int k, Int kc, Int c2, const DPConstraints& constraints = {});

/// Inclusive range of a allowed by the Cauchy-Schwarz inequality; empty when
/// nothing fits.
std::optional<std::pair<Int, Int>> cauchy_schwarz_range(int k, Int kc, Int c2);

/// 2g - 2 = C^2 + K.C. Throws ParityError if C^2 + K.C is odd.
Int adjunction_genus(Int kc, Int c2);

/// Number of distinct classes obtained by permuting the b_i.
Int orbit_size(const DPClass& c);

std::string to_string(const DPClass& c);

}  // namespace fanolink
