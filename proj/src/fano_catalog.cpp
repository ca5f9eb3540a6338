#include "fanolink/fano_catalog.hpp"

#include <algorithm>
#include <tuple>

#include "fanolink/lattice.hpp"
#include "fanolink/link_records.hpp"

namespace fanolink {

std::span<const FanoTarget> catalog() {
  static const std::vector<FanoTarget> rows = {
      {1, 10, 6, 7, "X10 in P^7",
       "degree-10 threefolds are known to be non-rational only for general members; "
       "kept in the search"},
      {1, 12, 7, 8, "X12 in P^8", ""},
      {1, 16, 9, 10, "X16 in P^10", ""},
      {1, 18, 10, 11, "X18 in P^11", ""},
      {1, 22, 12, 13, "X22 in P^13", ""},
      {2, 4, 1, 5, "complete intersection of two hyperquadrics in P^5", ""},
      {2, 5, 1, 6, "quintic del Pezzo threefold in P^6", ""},
      {3, 2, 0, 4, "hyperquadric in P^4", ""},
      {4, 1, 0, 3, "P^3", ""},
  };
  return rows;
}

const FanoTarget& find_target(Int d0, Int g0) {
  for (const auto& row : catalog()) {
    if (row.d0 == d0 && row.g0 == g0) return row;
  }
  throw Error(ErrorCode::InvalidArgument,
              "(" + std::to_string(d0) + "," + std::to_string(g0) + ") is not a catalog row");
}

namespace {

bool quadric_through_curve_check() {
  // Comparing K_Z = -4H + E with q^*K_X + F = -(6H - 2E) + F gives F.
  const DivisorClass f = q_exceptional_class<Int>(6, 2, 1, 1);
  const DivisorClass residual = DivisorClass{6, -2} - f;
  return f == DivisorClass{2, -1} && residual == DivisorClass{4, -1} && residual.h() > 0;
}

struct CitedReason {
  Int d0, g0, m, n, d;
  ExclusionReason reason;
};

constexpr CitedReason kCited[] = {
    {10, 6, 3, 7, 5, ExclusionReason::ResidualGenusBound},
    {10, 6, 3, 10, 10, ExclusionReason::NonIntegralE3},
    {16, 9, 2, 4, 3, ExclusionReason::ResidualGenusBound},
    {16, 9, 2, 6, 7, ExclusionReason::Ledger},
    {22, 12, 7, 16, 5, ExclusionReason::NonIntegralE3},
};

}  // namespace

std::span<const ExclusionLedgerEntry> exclusion_ledger() {
  static const std::vector<ExclusionLedgerEntry> entries = {
      {16, 9, 2, 6, 7,
       "F = K_Z - q^*K_X = 2H-E, so p(F) is a quadric through the curve; "
       "6H-2E-F = 4H-E has positive H-degree",
       quadric_through_curve_check,
       "r1/(16,9)/(2,6,7):sextics-singular-along-curve-contain-quadric"},
  };
  return entries;
}

void annotate_cited_reasons(SolveResult& result) {
  for (auto& c : result.candidates) {
    for (const auto& cited : kCited) {
      if (cited.d0 != result.d0 || cited.g0 != result.g0 || !c.same_key(cited.m, cited.n, cited.d)) {
        continue;
      }
      for (auto& cert : c.reasons) cert.cited = cert.reason == cited.reason;
    }
  }
}

std::vector<TargetResult> classify_rows(const ClassifyOptions& options) {
  SolveOptions solve;
  solve.strict_castelnuovo = options.strict_castelnuovo;
  if (options.use_ledger) solve.ledger = exclusion_ledger();

  std::vector<TargetResult> rows;
  for (const auto& target : catalog()) {
    if (options.only_index && target.r != *options.only_index) continue;
    TargetResult row{target, solve_links(target.d0, target.g0, Stage::Raw, solve),
                     solve_links(target.d0, target.g0, Stage::Filtered, solve)};
    annotate_cited_reasons(row.filtered);
    rows.push_back(std::move(row));
  }
  return rows;
}

Classification classify_all(const ClassifyOptions& options) {
  Classification out;
  out.rows = classify_rows(options);
  for (const auto& row : out.rows) {
    for (const auto& c : row.filtered.candidates) {
      if (c.status != CandidateStatus::Accepted) continue;
      const auto records = link_records();
      const auto match = std::find_if(records.begin(), records.end(), [&](const LinkRecord& l) {
        return l.target == row.target && c.same_key(l.m, l.n, l.d) && c.genus == l.g;
      });
      if (match == records.end()) {
        throw Error(ErrorCode::CatalogInconsistent,
                    "unexpected accepted candidate (" + std::to_string(c.m) + "," +
                        std::to_string(c.n) + "," + std::to_string(c.d) + ") for (d0,g0)=(" +
                        std::to_string(row.target.d0) + "," + std::to_string(row.target.g0) + ")");
      }
      validate_link_record(*match);
      out.links.push_back(*match);
    }
  }
  std::sort(out.links.begin(), out.links.end(),
            [](const LinkRecord& a, const LinkRecord& b) { return a.id < b.id; });
  return out;
}

}  // namespace fanolink
