#pragma once

// Solutions (m, n, d) of the numerical conditions on a special link
// P^3 --> X defined by degree-n surfaces with multiplicity m along a smooth
// curve of degree d:
//   (n^2 - m^2 d)(4m - n) = 2m(d0 + 1 - g0) - d0          (link equation)
//   n^2 > m^2 d                                            (residual curve)
//   m^2 | n^3 - d0,   m | n^2(n - 2) + 1 - g0              (divisibility)
// with m < n < 4m.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fanolink/checked.hpp"

namespace fanolink {

enum class Stage { Raw, Filtered };

enum class CandidateStatus { Raw, Accepted, Excluded };

/// One filter in the exclusion pipeline.
enum class ExclusionReason {
  Divisibility,        // F3
  NonIntegralE3,       // F4
  NonIntegralGenus,    // F5
  GenusOutOfRange,     // F5
  ResidualGenusBound,  // F6
  Ledger,              // F7
};

std::string_view to_string(ExclusionReason reason) noexcept;
std::string_view to_string(CandidateStatus status) noexcept;
std::string_view to_string(Stage stage) noexcept;

struct Certificate {
  ExclusionReason reason;
  std::string detail;
  /// "computed" or "ledger:<citation>".
  std::string provenance = "computed";
  /// True for the argument the classification cites for this exclusion.
  bool cited = false;
};

struct LinkCandidate {
  Int m = 0;
  Int n = 0;
  Int d = 0;
  Int t = 0;  // n^2 - m^2 d, degree of the residual curve
  /// E^3 = e3_numerator / e3_denominator (denominator m^3, unreduced).
  Int e3_numerator = 0;
  Int e3_denominator = 1;
  std::optional<Int> e3;
  std::optional<Int> genus;
  CandidateStatus status = CandidateStatus::Raw;
  std::vector<Certificate> reasons;

  bool same_key(Int m_, Int n_, Int d_) const { return m == m_ && n == n_ && d == d_; }
};

/// The degenerate family t = 0 (a pencil, never a birational map).
struct PencilSolution {
  Int m;
  Int n;
  Int d;
};

struct Invariants {
  Int e3;
  Int genus;
};

/// 2m(d0 + 1 - g0) - d0.
Int rhs_R(Int d0, Int g0, Int m);

/// Resultant of x^3 - d0 and x^3 - 2x^2 + (1 - g0).
Wide condition_resultant(Int d0, Int g0);

/// |resultant|; throws ZeroResultant when the two conditions share a root.
Int m_bound(Int d0, Int g0);

/// E^3 from (nH - mE)^3 = d0, then the genus from E^3 = 2 - 2g - 4d.
/// Throws NonIntegralE3, NonIntegralGenus or NegativeGenus.
Invariants derive_invariants(const LinkCandidate& c, Int d0);

struct ExclusionLedgerEntry {
  Int d0;
  Int g0;
  Int m;
  Int n;
  Int d;
  std::string machine_check_description;
  std::function<bool()> machine_check;
  std::string citation;
};

struct SolveOptions {
  std::optional<Int> m_max_override;
  /// Castelnuovo's bound for the residual curve instead of the plane bound.
  bool strict_castelnuovo = false;
  /// Search cap when the resultant vanishes.
  Int fallback_cap = 64;
  std::span<const ExclusionLedgerEntry> ledger;
};

struct SearchBound {
  std::string strategy;  // "resultant", "linear-fallback" or "override"
  Wide resultant = 0;
  Int bound = 0;
};

/// Post-hoc check that no solution sits near a heuristic cap.
struct CapAudit {
  Int cap = 0;
  Int largest_m = 0;
  bool passed = true;
};

struct SolveResult {
  Int d0 = 0;
  Int g0 = 0;
  Stage stage = Stage::Raw;
  SearchBound bound;
  std::optional<CapAudit> cap_audit;
  std::vector<LinkCandidate> candidates;
  std::vector<PencilSolution> pencils;
};

/// Deterministic enumeration, ascending (m, n). When the resultant is
/// nonzero only divisors m of it are searched. Throws InvalidArgument for
/// d0 < 1 or g0 < 0.
SolveResult solve_links(Int d0, Int g0, Stage stage, const SolveOptions& options = {});

/// Maximal genus of a nondegenerate degree-t curve in P^3.
Int castelnuovo_bound(Int t);
/// (t - 1)(t - 2) / 2.
Int plane_genus_bound(Int t);

}  // namespace fanolink
