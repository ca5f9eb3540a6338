#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "fanolink/composer.hpp"
#include "fanolink/delpezzo.hpp"
#include "fanolink/fano_catalog.hpp"
#include "fanolink/intpoly.hpp"

namespace fanolink {

using Json = nlohmann::json;  // std::map objects: keys serialize sorted

std::string version();

/// A Bezout-style combination u*p - v*q = claimed used to bound m.
struct DivisibilityIdentity {
  std::string label;
  Int d0 = 0;
  Int g0 = 0;
  IntPoly u, p, v, q;
  IntPoly claimed;
  std::string note;
};

/// The eight constant identities for the catalog rows, plus the linear
/// identity for (1, 0) read as a sum and as a difference.
std::vector<DivisibilityIdentity> divisibility_identities();

struct ComboAuditRow {
  DivisibilityIdentity identity;
  ComboVerdict verdict;
  bool flagged = false;
};

std::vector<ComboAuditRow> audit_combos();

struct ReportOptions {
  bool strict_castelnuovo = false;
};

Json to_json(const LinkCandidate& c);
Json to_json(const SolveResult& r);
Json to_json(const FanoTarget& t);
Json to_json(const LinkRecord& l);
Json to_json(const CompositionResult& c);
Json to_json(const PureSpecialClass& c);
Json to_json(const DPClass& c);
Json to_json(const ComboAuditRow& row);
Json to_json(const SrTable& table);

Json build_report(const ReportOptions& options = {});

/// Canonical bytes: two-space indent, sorted keys, trailing newline.
std::string render_json(const Json& j);

std::string render_text_report(const Json& report);
std::string render_text(const SolveResult& r);
std::string render_text(const CompositionResult& c);
std::string render_text(const std::vector<PureSpecialClass>& classes, const SrTable& sr);
std::string render_text(const std::vector<ComboAuditRow>& rows);
std::string render_text(const std::vector<DPClass>& classes);

}  // namespace fanolink
