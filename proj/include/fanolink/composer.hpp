#pragma once

// Cremona transformations phi = chi2^{-1} o chi1 of P^3 built from two special
// links onto the same Fano 3-fold, and the twelve pure special classes.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fanolink/link_records.hpp"

namespace fanolink {

enum class Tag { Determinantal, DeJonquieres, General, ExistenceUnknown, NotDetailed };

std::string_view to_string(Tag tag) noexcept;

/// Where bas(chi2^{-1}) sits relative to the exceptional locus of chi1.
/// Only meaningful for two L.4 links.
enum class Placement { General, OnExceptional };

std::string_view to_string(Placement placement) noexcept;

struct CycComponent {
  Int multiplicity = 1;
  Int degree = 0;
  std::string label;
};

/// Degrees of a base curve against H and E of the first link, obtained from
/// its degrees against H_Z and F.
struct SecancyData {
  std::string curve;
  TargetCurve on_target;
  BlowupCurve on_blowup;  // (degree, secancy to the center)
};

struct CompositionResult {
  std::string first;
  std::string second;
  Int incidence = 0;
  Placement placement = Placement::General;
  std::string clause;
  std::pair<Int, Int> bidegree;
  std::vector<CycComponent> cyc;
  std::string base_description;
  std::vector<Tag> tags;
  std::vector<SecancyData> secancy;
  std::optional<std::string> sr_type;

  Int cyc_degree() const;
};

/// Valid incidence counts |bas(chi1^{-1}) n bas(chi2^{-1})| for the pair.
std::pair<Int, Int> incidence_range(const LinkRecord& first, const LinkRecord& second,
                                    Placement placement = Placement::General);

/// Throws TargetMismatch, IncidenceOutOfRange, or NotDetailed (pairs with L.5).
CompositionResult compose(const LinkRecord& first, const LinkRecord& second, Int incidence,
                          Placement placement = Placement::General);

/// One of the twelve classes of pure special Cremona transformations with at
/// most two links.
struct PureSpecialClass {
  std::string id;
  std::vector<std::string> factors;  // chi1 first
  std::vector<Tag> tags;
  bool target_mismatch = false;
  std::string description;
  std::string citation;
  /// Bidegrees and cycles, empty for classes that are not detailed.
  std::vector<std::pair<Int, Int>> bidegrees;
  std::vector<CycComponent> cyc;  // single-link class only
  std::vector<CompositionResult> cases;
};

std::vector<PureSpecialClass> enumerate_pure_special();

struct SrTag {
  std::string clause;
  std::string type;
};

struct SrTable {
  std::vector<SrTag> positive;
  /// Bidegree (3,3) types that are not pure special.
  std::vector<std::string> negative;
};

SrTable sr_tags();
std::optional<std::string> sr_type_for(std::string_view clause);

}  // namespace fanolink
