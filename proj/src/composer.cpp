#include "fanolink/composer.hpp"

#include <algorithm>
#include <functional>

namespace fanolink {

std::string_view to_string(Tag tag) noexcept {
  switch (tag) {
    case Tag::Determinantal: return "determinantal";
    case Tag::DeJonquieres: return "deJonquieres";
    case Tag::General: return "general";
    case Tag::ExistenceUnknown: return "existence_unknown";
    case Tag::NotDetailed: return "not_detailed";
  }
  return "?";
}

std::string_view to_string(Placement placement) noexcept {
  return placement == Placement::General ? "general" : "on_exceptional";
}

Int CompositionResult::cyc_degree() const {
  Int total = 0;
  for (const auto& c : cyc) total = checked_add(total, checked_mul(c.multiplicity, c.degree));
  return total;
}

namespace {

/// A base curve of phi other than the center: the image under p of the
/// transform of part of bas(chi2^{-1}), measured on the first link's Z.
struct CurveSpec {
  std::string label;
  std::function<TargetCurve(Int)> degrees;  // as a function of the incidence
  std::function<Int(Int)> multiplicity;
};

struct ClauseRow {
  std::string first;
  std::string second;
  Placement placement;
  Int incidence_lo;
  Int incidence_hi;
  std::vector<Int> allowed;  // when nonempty, restricts [lo, hi]
  std::string clause;
  /// 1 where bas(chi1^{-1}) lies on the quadric system's base curve, lowering
  /// that degree of phi.
  std::pair<Int, Int> degree_drop;
  std::function<Int(Int)> center_multiplicity;
  std::vector<CurveSpec> curves;
  std::string base;
  std::vector<Tag> tags;
};

Int one(Int) { return 1; }

const TargetCurve kFiber{0, -1};  // a fiber of F over a point of q(F)

const std::vector<ClauseRow>& clause_table() {
  static const std::vector<ClauseRow> rows = {
      {"L.1", "L.1", Placement::General, 0, 0, {}, "same/L.1/disjoint", {0, 0}, one,
       {{"2-secant line", [](Int) { return TargetCurve{1, 0}; }, one}},
       "center and a 2-secant line", {Tag::Determinantal}},
      {"L.1", "L.1", Placement::General, 1, 1, {}, "same/L.1/incident", {0, 0}, one,
       {{"trisecant line", [](Int) { return kFiber; }, one}},
       "center and a trisecant line with an embedded point", {Tag::DeJonquieres}},
      {"L.2", "L.2", Placement::General, 0, 0, {}, "same/L.2/disjoint", {0, 0}, one,
       {{"4-secant conic of rank 1 or 3", [](Int) { return TargetCurve{2, 0}; }, one}},
       "center and a 4-secant conic of rank 1 or 3", {Tag::Determinantal}},
      {"L.2", "L.2", Placement::General, 1, 1, {}, "same/L.2/incident", {0, 0}, one,
       {{"line L' of a rank-2 conic", [](Int) { return TargetCurve{2, 1}; }, one},
        {"trisecant line L of a rank-2 conic", [](Int) { return kFiber; }, one}},
       "center and a 4-secant rank-2 conic L+L', L trisecant", {Tag::Determinantal}},
      {"L.3", "L.3", Placement::General, 0, 0, {}, "same/L.3", {0, 0}, one, {},
       "smooth conic and a point off its plane", {Tag::General}},
      {"L.4", "L.4", Placement::General, 0, 10, {}, "same/L.4/generic", {0, 0},
       [](Int) -> Int { return 4; },
       {{"curve C_{10-m} birational to bas(chi2^{-1})",
         [](Int m) { return TargetCurve{5, m}; }, one},
        {"trisecant line", [](Int) { return kFiber; }, [](Int m) { return m; }}},
       "elliptic quintic center, C_{10-m} and m trisecant lines", {}},
      {"L.4", "L.4", Placement::OnExceptional, 0, 5, {0, 5}, "same/L.4/in-exceptional", {0, 0},
       [](Int m) -> Int { return m == 5 ? 5 : 6; },
       {{"trisecant line", [](Int) { return kFiber; }, [](Int m) { return m; }}},
       "elliptic quintic center and m trisecant lines", {Tag::ExistenceUnknown}},
      {"L.3", "L.4", Placement::General, 0, 0, {}, "mixed/L.3-L.4/disjoint", {0, 0},
       [](Int) -> Int { return 4; },
       {{"genus-1 quintic D5", [](Int) { return TargetCurve{5, 0}; }, one}},
       "conic center and a 5-secant genus-1 quintic D5 (at most one double point)", {}},
      {"L.3", "L.4", Placement::General, 1, 1, {}, "mixed/L.3-L.4/incident", {1, 0}, one,
       {{"elliptic quartic D4", [](Int) { return TargetCurve{5, 1}; }, one}},
       "conic center and a 3-secant elliptic quartic D4", {Tag::Determinantal}},
      {"L.4", "L.3", Placement::General, 0, 0, {}, "mixed/L.4-L.3/disjoint", {0, 0}, one, {},
       "elliptic quintic center and one point, isolated or infinitely near", {}},
      {"L.4", "L.3", Placement::General, 1, 1, {}, "mixed/L.4-L.3/incident", {0, 1}, one,
       {{"trisecant line", [](Int) { return kFiber; }, one}},
       "elliptic quintic center and a trisecant line", {Tag::Determinantal}},
  };
  return rows;
}

bool allows(const ClauseRow& row, Int incidence) {
  if (incidence < row.incidence_lo || incidence > row.incidence_hi) return false;
  return row.allowed.empty() ||
         std::find(row.allowed.begin(), row.allowed.end(), incidence) != row.allowed.end();
}

bool is_l5(const LinkRecord& l) { return l.id == "L.5"; }

}  // namespace

std::pair<Int, Int> incidence_range(const LinkRecord& first, const LinkRecord& second,
                                    Placement placement) {
  Int lo = 0;
  Int hi = -1;
  bool found = false;
  for (const auto& row : clause_table()) {
    if (row.first != first.id || row.second != second.id || row.placement != placement) continue;
    lo = found ? std::min(lo, row.incidence_lo) : row.incidence_lo;
    hi = found ? std::max(hi, row.incidence_hi) : row.incidence_hi;
    found = true;
  }
  return {lo, hi};
}

CompositionResult compose(const LinkRecord& first, const LinkRecord& second, Int incidence,
                          Placement placement) {
  if (!(first.target == second.target)) {
    throw Error(ErrorCode::TargetMismatch, first.id + " and " + second.id +
                                               " end on different Fano 3-folds");
  }
  if (is_l5(first) || is_l5(second)) {
    throw Error(ErrorCode::NotDetailed,
                "compositions involving L.5 are counted but not described");
  }
  const auto& table = clause_table();
  const auto row = std::find_if(table.begin(), table.end(), [&](const ClauseRow& r) {
    return r.first == first.id && r.second == second.id && r.placement == placement &&
           allows(r, incidence);
  });
  if (row == table.end()) {
    const auto [lo, hi] = incidence_range(first, second, placement);
    throw Error(ErrorCode::IncidenceOutOfRange,
                "incidence " + std::to_string(incidence) + " is not valid for (" + first.id +
                    ", " + second.id + ", " + std::string(to_string(placement)) +
                    "); range " + std::to_string(lo) + ".." + std::to_string(hi));
  }

  CompositionResult out;
  out.first = first.id;
  out.second = second.id;
  out.incidence = incidence;
  out.placement = placement;
  out.clause = row->clause;
  out.base_description = row->base;
  out.tags = row->tags;
  out.sr_type = sr_type_for(row->clause);

  // A degree-a hypersurface section of X pulls back under a degree-n link to
  // a degree a*n surface.
  const Int degree = checked_sub(checked_mul(second.inverse.degree, first.n), row->degree_drop.first);
  const Int inverse_degree =
      checked_sub(checked_mul(first.inverse.degree, second.n), row->degree_drop.second);
  out.bidegree = {degree, inverse_degree};

  const LinkFrame frame = first.frame();
  Int others = 0;
  std::vector<CycComponent> rest;
  for (const auto& curve : row->curves) {
    const Int mult = curve.multiplicity(incidence);
    const TargetCurve on_target = curve.degrees(incidence);
    const BlowupCurve on_blowup = curve_degrees(on_target, frame);
    if (mult == 0 || on_blowup.first() <= 0) continue;
    out.secancy.push_back({curve.label, on_target, on_blowup});
    rest.push_back({mult, on_blowup.first(), curve.label});
    others = checked_add(others, checked_mul(mult, on_blowup.first()));
  }

  // Degree accounting: deg(cyc) = d^2 - e fixes the multiplicity of the center.
  const Int cyc_total = checked_sub(checked_mul(degree, degree), inverse_degree);
  const Int on_center = checked_sub(cyc_total, others);
  if (on_center % first.d != 0 || on_center / first.d != row->center_multiplicity(incidence)) {
    throw Error(ErrorCode::Internal, "degree accounting disagrees for " + row->clause);
  }
  out.cyc.push_back({on_center / first.d, first.d, "center: " + first.center});
  out.cyc.insert(out.cyc.end(), rest.begin(), rest.end());

  if (out.cyc_degree() != cyc_total) {
    throw Error(ErrorCode::Internal, "cycle degree mismatch for " + row->clause);
  }
  return out;
}

namespace {

std::vector<CompositionResult> all_cases(const LinkRecord& first, const LinkRecord& second) {
  std::vector<CompositionResult> cases;
  for (Placement placement : {Placement::General, Placement::OnExceptional}) {
    for (const auto& row : clause_table()) {
      if (row.first != first.id || row.second != second.id || row.placement != placement) continue;
      for (Int i = row.incidence_lo; i <= row.incidence_hi; ++i) {
        if (allows(row, i)) cases.push_back(compose(first, second, i, placement));
      }
    }
  }
  return cases;
}

std::vector<std::pair<Int, Int>> distinct_bidegrees(const std::vector<CompositionResult>& cases) {
  std::vector<std::pair<Int, Int>> out;
  for (const auto& c : cases) out.push_back(c.bidegree);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Tag> union_tags(const std::vector<CompositionResult>& cases) {
  std::vector<Tag> out;
  for (const auto& c : cases) out.insert(out.end(), c.tags.begin(), c.tags.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<PureSpecialClass> enumerate_pure_special() {
  std::vector<PureSpecialClass> out;
  auto next_id = [&] {
    const auto k = out.size() + 1;
    return std::string("PS-") + (k < 10 ? "0" : "") + std::to_string(k);
  };

  // One link: the cubo-cubic transformation of L.5 itself.
  {
    const auto& l5 = find_link("L.5");
    PureSpecialClass c;
    c.id = next_id();
    c.factors = {l5.id};
    c.tags = {Tag::General};
    c.description = "general cubo-cubic transformation; base locus " + l5.center;
    c.citation = "single/L.5";
    const Int d = l5.n;
    const Int e = l5.inverse.degree;
    c.bidegrees = {{d, e}};
    const Int total = d * d - e;
    if (total % l5.d != 0) throw Error(ErrorCode::Internal, "single-link degree accounting");
    c.cyc = {{total / l5.d, l5.d, "center: " + l5.center}};
    out.push_back(std::move(c));
  }

  // Two links of the same class.
  for (const auto& link : link_records()) {
    PureSpecialClass c;
    c.id = next_id();
    c.factors = {link.id, link.id};
    c.citation = "same/" + link.id;
    if (is_l5(link)) {
      c.tags = {Tag::NotDetailed};
      c.description = "two links of class L.5";
    } else {
      c.cases = all_cases(link, link);
      c.bidegrees = distinct_bidegrees(c.cases);
      c.tags = union_tags(c.cases);
      c.description = "two links of class " + link.id;
    }
    out.push_back(std::move(c));
  }

  // L.5 followed by the inverse of an L.i link, i = 1..4.
  for (const auto& link : link_records()) {
    if (is_l5(link)) continue;
    PureSpecialClass c;
    c.id = next_id();
    c.factors = {"L.5", link.id};
    c.tags = {Tag::NotDetailed};
    c.target_mismatch = true;
    c.description = "a link of class L.5 with a link of class " + link.id;
    c.citation = "word/L.5-" + link.id;
    out.push_back(std::move(c));
  }

  // Mixed L.3 / L.4 in both orders.
  for (const auto& [a, b] : {std::pair{"L.3", "L.4"}, std::pair{"L.4", "L.3"}}) {
    PureSpecialClass c;
    c.id = next_id();
    c.factors = {a, b};
    c.cases = all_cases(find_link(a), find_link(b));
    c.bidegrees = distinct_bidegrees(c.cases);
    c.tags = union_tags(c.cases);
    c.description = std::string("a link of class ") + a + " followed by the inverse of " + b;
    c.citation = std::string("mixed/") + a + "-" + b;
    out.push_back(std::move(c));
  }
  return out;
}

SrTable sr_tags() {
  return {{
              {"same/L.1/disjoint", "T33(3)"},
              {"same/L.2/disjoint", "T33(4)"},
              {"mixed/L.3-L.4/incident", "T33(6)"},
              {"mixed/L.4-L.3/incident", "T33(2)"},
          },
          {"T33(1)", "T33(5)", "T33(7)", "T33(8)"}};
}

std::optional<std::string> sr_type_for(std::string_view clause) {
  for (const auto& tag : sr_tags().positive) {
    if (tag.clause == clause) return tag.type;
  }
  return std::nullopt;
}

}  // namespace fanolink
