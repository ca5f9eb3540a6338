#include "fanolink/link_solver.hpp"

#include <algorithm>

#include "fanolink/intpoly.hpp"

namespace fanolink {

std::string_view to_string(ExclusionReason reason) noexcept {
  switch (reason) {
    case ExclusionReason::Divisibility: return "F3-divisibility";
    case ExclusionReason::NonIntegralE3: return "F4-nonintegral-E3";
    case ExclusionReason::NonIntegralGenus: return "F5-nonintegral-genus";
    case ExclusionReason::GenusOutOfRange: return "F5-genus-out-of-range";
    case ExclusionReason::ResidualGenusBound: return "F6-residual-genus-bound";
    case ExclusionReason::Ledger: return "F7-ledger";
  }
  return "?";
}

std::string_view to_string(CandidateStatus status) noexcept {
  switch (status) {
    case CandidateStatus::Raw: return "raw";
    case CandidateStatus::Accepted: return "accepted";
    case CandidateStatus::Excluded: return "excluded";
  }
  return "?";
}

std::string_view to_string(Stage stage) noexcept {
  return stage == Stage::Raw ? "raw" : "filtered";
}

Int rhs_R(Int d0, Int g0, Int m) {
  const Int inner = checked_sub(checked_add(d0, Int{1}), g0);
  return checked_sub(checked_mul(checked_mul(Int{2}, m), inner), d0);
}

Wide condition_resultant(Int d0, Int g0) {
  const IntPoly degree_condition{-Wide(d0), 0, 0, 1};
  const IntPoly genus_condition{1 - Wide(g0), 0, -2, 1};
  return resultant(degree_condition, genus_condition);
}

Int m_bound(Int d0, Int g0) {
  const Wide res = condition_resultant(d0, g0);
  if (res == 0) {
    throw Error(ErrorCode::ZeroResultant,
                "x^3 - d0 and x^3 - 2x^2 + (1 - g0) share a root; no resultant bound");
  }
  return narrow(res < 0 ? -res : res);
}

Int plane_genus_bound(Int t) {
  if (t < 1) return 0;
  return checked_mul(t - 1, t - 2) / 2;
}

Int castelnuovo_bound(Int t) {
  if (t < 3) return 0;
  const Int k = (t - 1) / 2;
  const Int eps = (t - 1) % 2;
  return checked_add(checked_mul(k, k - 1), checked_mul(k, eps));
}

namespace {

Int e3_numerator(Int m, Int n, Int d, Int d0) {
  const Int n3 = checked_mul(checked_mul(n, n), n);
  const Int mixed = checked_mul(checked_mul(checked_mul(Int{3}, n), checked_mul(m, m)), d);
  return checked_sub(checked_sub(n3, mixed), d0);
}

void fill_derived(LinkCandidate& c, Int d0) {
  c.e3_numerator = e3_numerator(c.m, c.n, c.d, d0);
  c.e3_denominator = checked_mul(checked_mul(c.m, c.m), c.m);
  c.e3.reset();
  c.genus.reset();
  if (c.e3_numerator % c.e3_denominator != 0) return;
  c.e3 = c.e3_numerator / c.e3_denominator;
  const Int twice_genus = checked_sub(checked_sub(Int{2}, checked_mul(Int{4}, c.d)), *c.e3);
  if (twice_genus % 2 == 0) c.genus = twice_genus / 2;
}

void check_output_invariants(const LinkCandidate& c, Int d0, Int g0) {
  const Int lhs = checked_mul(c.t, checked_sub(checked_mul(Int{4}, c.m), c.n));
  const bool ok = c.m < c.n && c.n < 4 * c.m && c.t >= 1 &&
                  c.t == checked_sub(checked_mul(c.n, c.n), checked_mul(checked_mul(c.m, c.m), c.d)) &&
                  lhs == rhs_R(d0, g0, c.m);
  if (!ok) throw Error(ErrorCode::Internal, "emitted candidate violates the link equation");
}

std::string fraction(Int num, Int den) { return std::to_string(num) + "/" + std::to_string(den); }

void run_filters(LinkCandidate& c, Int d0, Int g0, const SolveOptions& options) {
  // F3
  const Int n3_minus_d0 = checked_sub(checked_mul(checked_mul(c.n, c.n), c.n), d0);
  const Int genus_cond = checked_sub(
      checked_add(checked_mul(checked_mul(c.n, c.n), c.n - 2), Int{1}), g0);
  const Int m2 = checked_mul(c.m, c.m);
  if (n3_minus_d0 % m2 != 0 || genus_cond % c.m != 0) {
    c.reasons.push_back({ExclusionReason::Divisibility,
                         "m^2 | n^3-d0: " + std::to_string(n3_minus_d0) + " mod " +
                             std::to_string(m2) + " = " + std::to_string(n3_minus_d0 % m2) +
                             "; m | n^2(n-2)+1-g0: " + std::to_string(genus_cond) + " mod " +
                             std::to_string(c.m) + " = " + std::to_string(genus_cond % c.m)});
  }

  // F4, F5
  try {
    const Invariants inv = derive_invariants(c, d0);
    const Int plane = plane_genus_bound(c.d);
    if (inv.genus > plane) {
      c.reasons.push_back({ExclusionReason::GenusOutOfRange,
                           "genus " + std::to_string(inv.genus) + " of a degree-" +
                               std::to_string(c.d) + " curve exceeds " + std::to_string(plane)});
    }
  } catch (const Error& err) {
    switch (err.code()) {
      case ErrorCode::NonIntegralE3:
        c.reasons.push_back({ExclusionReason::NonIntegralE3,
                             "E^3 = " + fraction(c.e3_numerator, c.e3_denominator) + ", " +
                                 std::to_string(c.e3_numerator) + " mod " +
                                 std::to_string(c.e3_denominator) + " = " +
                                 std::to_string(c.e3_numerator % c.e3_denominator)});
        break;
      case ErrorCode::NonIntegralGenus:
        c.reasons.push_back({ExclusionReason::NonIntegralGenus, err.what()});
        break;
      case ErrorCode::NegativeGenus:
        c.reasons.push_back({ExclusionReason::GenusOutOfRange, err.what()});
        break;
      default:
        throw;
    }
  }

  // F6
  Int bound = plane_genus_bound(c.t);
  std::string bound_name = "plane";
  if (options.strict_castelnuovo && c.t >= 3) {
    bound = std::min(bound, castelnuovo_bound(c.t));
    bound_name = "Castelnuovo";
  }
  if (g0 > bound || (g0 >= 1 && c.t < 3)) {
    c.reasons.push_back({ExclusionReason::ResidualGenusBound,
                         "residual curve of degree t=" + std::to_string(c.t) + " would have genus " +
                             std::to_string(g0) + " > " + bound_name + " bound " +
                             std::to_string(bound)});
  }

  // F7
  for (const auto& entry : options.ledger) {
    if (entry.d0 != d0 || entry.g0 != g0 || !c.same_key(entry.m, entry.n, entry.d)) continue;
    if (!entry.machine_check || !entry.machine_check()) {
      throw Error(ErrorCode::CatalogInconsistent,
                  "ledger machine check failed: " + entry.machine_check_description);
    }
    c.reasons.push_back({ExclusionReason::Ledger, entry.machine_check_description,
                         "ledger:" + entry.citation});
  }

  c.status = c.reasons.empty() ? CandidateStatus::Accepted : CandidateStatus::Excluded;
}

}  // namespace

Invariants derive_invariants(const LinkCandidate& c, Int d0) {
  const Int num = e3_numerator(c.m, c.n, c.d, d0);
  const Int den = checked_mul(checked_mul(c.m, c.m), c.m);
  if (num % den != 0) {
    throw Error(ErrorCode::NonIntegralE3, "E^3 = " + fraction(num, den) + " is not an integer");
  }
  const Int e3 = num / den;
  const Int twice_genus = checked_sub(checked_sub(Int{2}, checked_mul(Int{4}, c.d)), e3);
  if (twice_genus % 2 != 0) {
    throw Error(ErrorCode::NonIntegralGenus, "genus " + fraction(twice_genus, 2) + " is not an integer");
  }
  if (twice_genus < 0) {
    throw Error(ErrorCode::NegativeGenus, "genus " + std::to_string(twice_genus / 2) + " is negative");
  }
  return {e3, twice_genus / 2};
}

SolveResult solve_links(Int d0, Int g0, Stage stage, const SolveOptions& options) {
  if (d0 < 1 || g0 < 0) throw Error(ErrorCode::InvalidArgument, "need d0 >= 1 and g0 >= 0");
  if (options.m_max_override && *options.m_max_override < 1) {
    throw Error(ErrorCode::InvalidArgument, "m bound override must be positive");
  }

  SolveResult out;
  out.d0 = d0;
  out.g0 = g0;
  out.stage = stage;
  out.bound.resultant = condition_resultant(d0, g0);
  if (options.m_max_override) {
    out.bound.strategy = "override";
    out.bound.bound = *options.m_max_override;
  } else if (out.bound.resultant != 0) {
    out.bound.strategy = "resultant";
    out.bound.bound = m_bound(d0, g0);
  } else {
    // Common root: fall back to m | 2(n-1) with n < 4m, searched up to a cap.
    out.bound.strategy = "linear-fallback";
    out.bound.bound = options.fallback_cap;
  }

  for (Int m = 1; m <= out.bound.bound; ++m) {
    // The resultant lies in the ideal of both divisibility conditions, so m divides it.
    if (out.bound.resultant != 0 && out.bound.resultant % m != 0) continue;
    const Int rhs = rhs_R(d0, g0, m);
    const Int m2 = checked_mul(m, m);
    for (Int n = m + 1; n < 4 * m; ++n) {
      const Int n2 = checked_mul(n, n);
      if (rhs == 0) {
        if (n2 % m2 == 0) out.pencils.push_back({m, n, n2 / m2});
        continue;
      }
      const Int slack = 4 * m - n;
      if (rhs % slack != 0) continue;
      const Int t = rhs / slack;
      if (t < 1 || (n2 - t) % m2 != 0) continue;
      const Int d = (n2 - t) / m2;
      if (d < 1) continue;
      LinkCandidate c;
      c.m = m;
      c.n = n;
      c.d = d;
      c.t = t;
      fill_derived(c, d0);
      check_output_invariants(c, d0, g0);
      if (stage == Stage::Filtered) run_filters(c, d0, g0, options);
      out.candidates.push_back(std::move(c));
    }
  }

  if (out.bound.strategy == "linear-fallback") {
    CapAudit audit;
    audit.cap = out.bound.bound;
    for (const auto& c : out.candidates) audit.largest_m = std::max(audit.largest_m, c.m);
    audit.passed = 2 * audit.largest_m <= audit.cap;
    out.cap_audit = audit;
  }
  return out;
}

}  // namespace fanolink
