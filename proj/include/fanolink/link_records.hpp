#pragma once

#include <span>
#include <string>
#include <string_view>

#include "fanolink/fano_catalog.hpp"
#include "fanolink/lattice.hpp"

namespace fanolink {

/// How the inverse link X --> P^3 is defined: by hypersurfaces of `degree`
/// on X through `base`.
struct InverseSystem {
  Int degree = 1;
  std::string base;
};

/// One of the five special links L.1 ... L.5 out of P^3.
struct LinkRecord {
  std::string id;
  Int m = 1;
  Int n = 0;
  Int d = 0;
  Int g = 0;
  FanoTarget target;
  DivisorClass f;
  Int a_f = 1;  // 1: q contracts F to a curve, 2: to a point
  InverseSystem inverse;
  std::string center;  // the blown-up curve in P^3

  LinkFrame frame() const { return {n, m, f}; }
  BlowupGeometry geometry() const { return BlowupGeometry::make(d, g); }
  DivisorClass h_z() const { return {n, -m}; }
};

std::span<const LinkRecord> link_records();

/// Throws UnknownLink for ids outside L.1 ... L.5.
const LinkRecord& find_link(std::string_view id);

/// Checks F = q_exceptional_class(n, m, r, a_F) and (nH - mE)^3 = d0.
/// Throws CatalogInconsistent on failure.
void validate_link_record(const LinkRecord& link);

struct Classification {
  std::vector<TargetResult> rows;
  std::vector<LinkRecord> links;
};

/// Runs every row and matches the accepted candidates against the five known
/// links. Throws CatalogInconsistent on any unexpected acceptance.
Classification classify_all(const ClassifyOptions& options = {});

}  // namespace fanolink
