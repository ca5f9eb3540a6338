#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fanolink/link_solver.hpp"

namespace fanolink {

/// A smooth Fano 3-fold of Picard number one, as it enters the link equations.
struct FanoTarget {
  int r = 0;  // index
  Int d0 = 0;
  Int g0 = 0;
  int ambient_dim = 0;
  std::string name;
  std::string note;

  friend bool operator==(const FanoTarget& a, const FanoTarget& b) {
    return a.d0 == b.d0 && a.g0 == b.g0 && a.r == b.r;
  }
};

/// Index 1: (10,6) (12,7) (16,9) (18,10) (22,12); index 2: (4,1) (5,1);
/// index 3: (2,0); index 4: (1,0).
std::span<const FanoTarget> catalog();

/// Throws InvalidArgument if (d0, g0) is not a catalog row.
const FanoTarget& find_target(Int d0, Int g0);

/// Exclusions that rest on a geometric argument, each with a machine-checkable
/// numeric part.
std::span<const ExclusionLedgerEntry> exclusion_ledger();

/// Marks on each excluded candidate which certificate the classification
/// argument relies on.
void annotate_cited_reasons(SolveResult& result);

struct TargetResult {
  FanoTarget target;
  SolveResult raw;
  SolveResult filtered;
};

struct ClassifyOptions {
  bool strict_castelnuovo = false;
  bool use_ledger = true;
  std::optional<int> only_index;
};

/// Raw and filtered solver runs over the catalog rows.
std::vector<TargetResult> classify_rows(const ClassifyOptions& options = {});

}  // namespace fanolink
