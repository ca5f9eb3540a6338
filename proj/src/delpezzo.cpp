#include "fanolink/delpezzo.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fanolink {

Int DPClass::k_dot() const {
  Int s = checked_mul(Int{-3}, a);
  for (Int bi : b) s = checked_add(s, bi);
  return s;
}

Int DPClass::self_intersection() const {
  Int s = checked_mul(a, a);
  for (Int bi : b) s = checked_sub(s, checked_mul(bi, bi));
  return s;
}

Int adjunction_genus(Int kc, Int c2) {
  const Int twice = checked_add(checked_add(c2, kc), Int{2});
  if (twice % 2 != 0) {
    throw Error(ErrorCode::ParityError, "C^2 + K.C must be even");
  }
  return twice / 2;
}

Int orbit_size(const DPClass& c) {
  std::map<Int, Int> multiplicity;
  for (Int bi : c.b) ++multiplicity[bi];
  Int count = 1;
  Int placed = 0;
  // multinomial k! / prod(mult!), built as a product of binomials
  for (const auto& [value, mult] : multiplicity) {
    for (Int j = 1; j <= mult; ++j) {
      count = checked_mul(count, placed + j) / j;
    }
    placed += mult;
  }
  return count;
}

std::optional<std::pair<Int, Int>> cauchy_schwarz_range(int k, Int kc, Int c2) {
  if (k < 1 || k > 9) throw Error(ErrorCode::InvalidArgument, "point count must be in 1..9");
  if (k == 9) {
    throw Error(ErrorCode::UnboundedSearch,
                "for k = 9 the Cauchy-Schwarz bound on a is linear and does not bound the search");
  }
  // (9 - k) a^2 + 6 kc a + kc^2 + k c2 <= 0
  const Wide qa = 9 - k;
  const Wide qb = checked_mul(Wide{6}, Wide(kc));
  const Wide qc = checked_add(checked_mul(Wide(kc), Wide(kc)), checked_mul(Wide(k), Wide(c2)));
  auto value = [&](Wide a) { return checked_add(checked_add(checked_mul(qa, checked_mul(a, a)), checked_mul(qb, a)), qc); };
  const Wide disc = checked_sub(checked_mul(qb, qb), checked_mul(Wide{4}, checked_mul(qa, qc)));
  if (disc < 0) return std::nullopt;
  const Wide root = isqrt(disc);
  // Real roots lie in [(-qb - root - 1) / 2qa, (-qb + root + 1) / 2qa]; tighten exactly.
  Wide lo = floor_div<Wide>(-qb - root - 1, 2 * qa) - 1;
  Wide hi = floor_div<Wide>(-qb + root + 1, 2 * qa) + 1;
  while (lo <= hi && value(lo) > 0) ++lo;
  while (hi >= lo && value(hi) > 0) --hi;
  if (lo > hi) return std::nullopt;
  return std::pair{narrow(lo), narrow(hi)};
}

namespace {

struct Search {
  int k;
  Int a;
  Int lo;
  Int hi;
  const DPConstraints& constraints;
  std::vector<Int> current;
  std::vector<DPClass>& out;

  // Fill positions [pos, k) with nonincreasing values <= cap.
  void fill(int pos, Int cap, Int sum_left, Int sq_left) {
    const Int slots = k - pos;
    if (slots == 0) {
      if (sum_left == 0 && sq_left == 0) accept();
      return;
    }
    for (Int v = cap; v >= lo; --v) {
      const Int v2 = v * v;
      if (v2 > sq_left) continue;
      // Remaining slots take values in [lo, v].
      if (sum_left - v > (slots - 1) * v || sum_left - v < (slots - 1) * lo) continue;
      current[static_cast<std::size_t>(pos)] = v;
      fill(pos + 1, v, sum_left - v, sq_left - v2);
    }
  }

  void accept() {
    if (constraints.pair_bound && k >= 2 && current[0] + current[1] > a) return;
    out.push_back({a, current});
  }
};

}  // namespace

std::vector<DPClass> enumerate_classes(int k, Int kc, Int c2, const DPConstraints& constraints) {
  const auto range = cauchy_schwarz_range(k, kc, c2);
  std::vector<DPClass> out;
  if (!range) return out;
  for (Int a = range->first; a <= range->second; ++a) {
    const Int sum = checked_add(checked_mul(Int{3}, a), kc);
    const Int sq = checked_sub(checked_mul(a, a), c2);
    if (sq < 0) continue;
    const Int root = narrow(isqrt(sq));
    Int hi = root;
    if (constraints.bmax) hi = std::min(hi, *constraints.bmax);
    const Int lo = constraints.allow_exceptional ? -root : 0;
    if (hi < lo) continue;
    Search search{k, a, lo, hi, constraints, std::vector<Int>(static_cast<std::size_t>(k)), out};
    search.fill(0, hi, sum, sq);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const DPClass& c) {
  std::string s = "(" + std::to_string(c.a) + ";";
  for (std::size_t i = 0; i < c.b.size(); ++i) {
    s += (i ? "," : "") + std::to_string(c.b[i]);
  }
  return s + ")";
}

}  // namespace fanolink
