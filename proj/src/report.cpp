#include "fanolink/report.hpp"

#include <iomanip>
#include <sstream>

namespace fanolink {

std::string version() { return FANOLINK_VERSION; }

namespace {

IntPoly x_pow(int k) { return IntPoly::monomial(1, k); }

/// n^3 - d0 and n^3 - 2n^2 + 1 - g0.
IntPoly degree_condition(Int d0) { return x_pow(3) - IntPoly::constant(d0); }
IntPoly genus_condition(Int g0) { return x_pow(3) - IntPoly::monomial(2, 2) + IntPoly::constant(1 - g0); }

Json poly_json(const IntPoly& p) { return to_string(p); }

Json pair_json(std::pair<Int, Int> p) { return Json::array({p.first, p.second}); }

Json tags_json(const std::vector<Tag>& tags) {
  Json out = Json::array();
  for (Tag t : tags) out.push_back(std::string(to_string(t)));
  return out;
}

Json cyc_json(const std::vector<CycComponent>& cyc) {
  Json out = Json::array();
  for (const auto& c : cyc) {
    out.push_back({{"multiplicity", c.multiplicity}, {"degree", c.degree}, {"label", c.label},
                   {"provenance", "computed"}});
  }
  return out;
}

}  // namespace

std::vector<DivisibilityIdentity> divisibility_identities() {
  const IntPoly n = IntPoly::x();
  auto quad = [](Wide a, Wide b, Wide c) { return IntPoly{c, b, a}; };
  std::vector<DivisibilityIdentity> out = {
      {"135", 10, 6, quad(2, 4, -11), degree_condition(10), quad(2, 8, 5), genus_condition(6),
       IntPoly::constant(135), ""},
      {"156", 12, 7, quad(2, 4, -10), degree_condition(12), quad(2, 8, 6), genus_condition(7),
       IntPoly::constant(156), ""},
      {"96", 16, 9, quad(1, 2, -4), degree_condition(16), quad(1, 4, 4), genus_condition(9),
       IntPoly::constant(96), ""},
      {"414", 18, 10, quad(4, 8, -14), degree_condition(18), quad(4, 16, 18), genus_condition(10),
       IntPoly::constant(414), ""},
      {"464", 22, 12, quad(4, 8, -10), degree_condition(22), quad(4, 16, 22), genus_condition(12),
       IntPoly::constant(464),
       "the cofactors evaluate to 462 = 2*3*7*11; m = 7 divides 462 but not 464"},
      {"8", 4, 1, quad(1, 0, -2), degree_condition(4), quad(1, 2, 2), genus_condition(1),
       IntPoly::constant(8), ""},
      {"15", 5, 1, quad(2, 0, -3), degree_condition(5), quad(2, 4, 5), genus_condition(1),
       IntPoly::constant(15), ""},
      {"5", 2, 0, quad(6, -4, -7), degree_condition(2), quad(6, 8, 9), genus_condition(0),
       IntPoly::constant(5), ""},
      {"2(n-1) as a sum", 1, 0, n - IntPoly::constant(2), degree_condition(1), -n,
       genus_condition(0), IntPoly{-2, 2},
       "the sum (n-2)(n^3-1) + n(n^3-2n^2+1) is not 2(n-1)"},
      {"2(n-1) difference variant", 1, 0, n - IntPoly::constant(2), degree_condition(1), n,
       genus_condition(0), IntPoly{-2, 2},
       "the difference (n-2)(n^3-1) - n(n^3-2n^2+1) = -2(n-1); m | 2(n-1) still follows"},
  };
  return out;
}

std::vector<ComboAuditRow> audit_combos() {
  std::vector<ComboAuditRow> rows;
  for (auto& id : divisibility_identities()) {
    ComboVerdict verdict = verify_combo(id.u, id.p, id.v, id.q, id.claimed);
    const bool flagged = verdict.kind != ComboKind::Exact;
    rows.push_back({std::move(id), std::move(verdict), flagged});
  }
  return rows;
}

Json to_json(const LinkCandidate& c) {
  Json reasons = Json::array();
  for (const auto& r : c.reasons) {
    reasons.push_back({{"filter", std::string(to_string(r.reason))},
                       {"detail", r.detail},
                       {"provenance", r.provenance},
                       {"cited", r.cited}});
  }
  return {{"m", c.m},
          {"n", c.n},
          {"d", c.d},
          {"t", c.t},
          {"E3", c.e3 ? Json(*c.e3) : Json(nullptr)},
          {"E3_exact", std::to_string(c.e3_numerator) + "/" + std::to_string(c.e3_denominator)},
          {"genus", c.genus ? Json(*c.genus) : Json(nullptr)},
          {"status", std::string(to_string(c.status))},
          {"reasons", reasons},
          {"provenance", "computed"}};
}

Json to_json(const SolveResult& r) {
  Json candidates = Json::array();
  for (const auto& c : r.candidates) candidates.push_back(to_json(c));
  Json pencils = Json::array();
  for (const auto& p : r.pencils) {
    pencils.push_back({{"m", p.m}, {"n", p.n}, {"d", p.d}, {"provenance", "computed"}});
  }
  Json audit = nullptr;
  if (r.cap_audit) {
    audit = {{"cap", r.cap_audit->cap},
             {"largest_m", r.cap_audit->largest_m},
             {"passed", r.cap_audit->passed}};
  }
  return {{"d0", r.d0},
          {"g0", r.g0},
          {"stage", std::string(to_string(r.stage))},
          {"m_bound",
           {{"strategy", r.bound.strategy},
            {"resultant", narrow(r.bound.resultant)},
            {"bound", r.bound.bound},
            {"provenance", "computed"}}},
          {"cap_audit", audit},
          {"candidates", candidates},
          {"pencils", pencils}};
}

Json to_json(const FanoTarget& t) {
  return {{"r", t.r},         {"d0", t.d0},     {"g0", t.g0},
          {"N", t.ambient_dim}, {"name", t.name}, {"note", t.note}};
}

Json to_json(const LinkRecord& l) {
  const auto geom = l.geometry();
  return {{"id", l.id},
          {"m", l.m},
          {"n", l.n},
          {"d", l.d},
          {"genus", l.g},
          {"E3", geom.e_cubed()},
          {"target", to_json(l.target)},
          {"F", to_string(l.f)},
          {"a_F", l.a_f},
          {"contraction", l.a_f == 1 ? "curve" : "point"},
          {"H_Z_cubed", cube(l.h_z(), geom)},
          {"inverse_system", {{"degree", l.inverse.degree}, {"base", l.inverse.base}}},
          {"center", l.center},
          {"provenance", "computed"}};
}

Json to_json(const CompositionResult& c) {
  Json secancy = Json::array();
  for (const auto& s : c.secancy) {
    secancy.push_back({{"curve", s.curve},
                       {"degree_H_Z", s.on_target.first()},
                       {"degree_F", s.on_target.second()},
                       {"degree", s.on_blowup.first()},
                       {"secancy", s.on_blowup.second()},
                       {"provenance", "computed"}});
  }
  return {{"factors", Json::array({c.first, c.second})},
          {"incidence", c.incidence},
          {"placement", std::string(to_string(c.placement))},
          {"clause", c.clause},
          {"bidegree", pair_json(c.bidegree)},
          {"cyc", cyc_json(c.cyc)},
          {"cyc_degree", c.cyc_degree()},
          {"base", c.base_description},
          {"tags", tags_json(c.tags)},
          {"secancy", secancy},
          {"sr_type", c.sr_type ? Json(*c.sr_type) : Json(nullptr)},
          {"citation", c.clause},
          {"provenance", "computed"}};
}

Json to_json(const PureSpecialClass& c) {
  Json bidegrees = Json::array();
  for (const auto& b : c.bidegrees) bidegrees.push_back(pair_json(b));
  Json cases = Json::array();
  std::vector<std::string> sr;
  for (const auto& k : c.cases) {
    cases.push_back(to_json(k));
    if (k.sr_type) sr.push_back(*k.sr_type);
  }
  return {{"id", c.id},
          {"factors", c.factors},
          {"length", c.factors.size()},
          {"bidegree", bidegrees},
          {"cyc", cyc_json(c.cyc)},
          {"tags", tags_json(c.tags)},
          {"sr_type", sr},
          {"citation", c.citation},
          {"description", c.description},
          {"target_mismatch", c.target_mismatch},
          {"cases", cases},
          {"provenance", "computed"}};
}

Json to_json(const DPClass& c) {
  return {{"a", c.a},
          {"b", c.b},
          {"K_dot_C", c.k_dot()},
          {"C_squared", c.self_intersection()},
          {"orbit_size", orbit_size(c)}};
}

Json to_json(const ComboAuditRow& row) {
  const auto& id = row.identity;
  return {{"label", id.label},
          {"d0", id.d0},
          {"g0", id.g0},
          {"u", poly_json(id.u)},
          {"p", poly_json(id.p)},
          {"v", poly_json(id.v)},
          {"q", poly_json(id.q)},
          {"claimed", poly_json(id.claimed)},
          {"value", poly_json(row.verdict.value)},
          {"verdict", std::string(to_string(row.verdict.kind))},
          {"residual", poly_json(row.verdict.residual)},
          {"flagged", row.flagged},
          {"note", id.note},
          {"provenance", "computed"}};
}

Json to_json(const SrTable& table) {
  Json positive = Json::array();
  for (const auto& t : table.positive) positive.push_back({{"clause", t.clause}, {"type", t.type}});
  return {{"positive", positive}, {"negative", table.negative}};
}

Json build_report(const ReportOptions& options) {
  ClassifyOptions classify;
  classify.strict_castelnuovo = options.strict_castelnuovo;
  const Classification result = classify_all(classify);

  Json targets = Json::array();
  for (const auto& row : result.rows) {
    Json t = to_json(row.target);
    const Json solved = to_json(row.filtered);
    t["m_bound"] = solved["m_bound"];
    t["cap_audit"] = solved["cap_audit"];
    t["candidates"] = solved["candidates"];
    t["pencils"] = solved["pencils"];
    Json raw = Json::array();
    for (const auto& c : row.raw.candidates) raw.push_back(Json::array({c.m, c.n, c.d}));
    t["raw"] = raw;
    targets.push_back(std::move(t));
  }

  Json links = Json::array();
  for (const auto& l : result.links) links.push_back(to_json(l));

  Json classes = Json::array();
  for (const auto& c : enumerate_pure_special()) classes.push_back(to_json(c));

  Json audit = Json::array();
  for (const auto& row : audit_combos()) audit.push_back(to_json(row));

  return {{"version", version()},
          {"options", {{"strict_castelnuovo", options.strict_castelnuovo}}},
          {"targets", targets},
          {"links", links},
          {"cremona_classes", classes},
          {"sr_table", to_json(sr_tags())},
          {"combo_audit", audit}};
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string triple(const Json& c) {
  return "(" + std::to_string(c["m"].get<Int>()) + "," + std::to_string(c["n"].get<Int>()) + "," +
         std::to_string(c["d"].get<Int>()) + ")";
}

std::string bidegree_text(const Json& b) {
  return "(" + std::to_string(b[0].get<Int>()) + "," + std::to_string(b[1].get<Int>()) + ")";
}

std::string cyc_text(const Json& cyc) {
  std::string s;
  for (const auto& c : cyc) {
    if (!s.empty()) s += " + ";
    const Int mult = c["multiplicity"].get<Int>();
    s += (mult == 1 ? "" : std::to_string(mult) + "*") + "C" + std::to_string(c["degree"].get<Int>());
  }
  return s.empty() ? "-" : s;
}

void candidate_rows(std::ostream& os, const Json& candidates) {
  for (const auto& c : candidates) {
    std::ostringstream line;
    line << "    " << std::left << std::setw(12) << triple(c) << std::setw(5) << c["t"].get<Int>() << std::setw(12)
         << c["E3_exact"].get<std::string>() << std::setw(7)
         << (c["genus"].is_null() ? std::string("-") : std::to_string(c["genus"].get<Int>())) << std::setw(10)
         << c["status"].get<std::string>();
    bool first = true;
    for (const auto& r : c["reasons"]) {
      line << (first ? "" : ", ") << r["filter"].get<std::string>() << (r["cited"].get<bool>() ? "*" : "");
      first = false;
    }
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    os << text << "\n";
  }
}

}  // namespace

std::string render_text_report(const Json& report) {
  std::ostringstream os;
  os << "fanolink " << report["version"].get<std::string>() << "\n\n";
  os << "TARGETS (candidates: (m,n,d)  t  E3  genus  status  reasons; * = cited)\n";
  for (const auto& t : report["targets"]) {
    os << "  r=" << t["r"].get<int>() << " (d0,g0)=(" << t["d0"].get<Int>() << "," << t["g0"].get<Int>()
       << ")  " << t["name"].get<std::string>() << "  [m-bound " << t["m_bound"]["strategy"].get<std::string>()
       << " " << t["m_bound"]["bound"].get<Int>() << "]\n";
    if (t["candidates"].empty()) os << "    (no solutions)\n";
    candidate_rows(os, t["candidates"]);
  }
  os << "\nLINKS\n";
  for (const auto& l : report["links"]) {
    os << "  " << std::left << std::setw(5) << l["id"].get<std::string>() << "(m,n,d,g)=(" << l["m"].get<Int>()
       << "," << l["n"].get<Int>() << "," << l["d"].get<Int>() << "," << l["genus"].get<Int>() << ")  d0="
       << l["target"]["d0"].get<Int>() << "  F=" << std::setw(7) << l["F"].get<std::string>() << "  "
       << l["target"]["name"].get<std::string>() << "\n";
  }
  os << "\nCREMONA CLASSES\n";
  for (const auto& c : report["cremona_classes"]) {
    std::string word;
    for (const auto& f : c["factors"]) word += (word.empty() ? "" : " ") + f.get<std::string>();
    std::string bideg;
    for (const auto& b : c["bidegree"]) bideg += (bideg.empty() ? "" : " ") + bidegree_text(b);
    std::string tags;
    for (const auto& t : c["tags"]) tags += (tags.empty() ? "" : ",") + t.get<std::string>();
    os << "  " << c["id"].get<std::string>() << "  " << std::left << std::setw(10) << word << std::setw(14)
       << (bideg.empty() ? "-" : bideg) << tags << "\n";
  }
  os << "\nCOMBO AUDIT\n";
  for (const auto& a : report["combo_audit"]) {
    os << "  " << std::left << std::setw(28) << a["label"].get<std::string>() << std::setw(15)
       << a["verdict"].get<std::string>() << "value " << a["value"].get<std::string>()
       << (a["flagged"].get<bool>() ? "  FLAGGED" : "") << "\n";
  }
  return os.str();
}

std::string render_text(const SolveResult& r) {
  std::ostringstream os;
  os << "(d0,g0)=(" << r.d0 << "," << r.g0 << ")  stage " << to_string(r.stage) << "  m-bound "
     << r.bound.strategy << " " << r.bound.bound << " (resultant " << to_string_wide(r.bound.resultant)
     << ")\n";
  const Json j = to_json(r);
  if (r.candidates.empty()) os << "    (no solutions)\n";
  candidate_rows(os, j["candidates"]);
  for (const auto& p : r.pencils) {
    os << "    pencil (" << p.m << "," << p.n << "," << p.d << ")\n";
  }
  if (r.cap_audit) {
    os << "cap audit: cap " << r.cap_audit->cap << ", largest m " << r.cap_audit->largest_m << ", "
       << (r.cap_audit->passed ? "passed" : "FAILED") << "\n";
  }
  return os.str();
}

std::string render_text(const CompositionResult& c) {
  std::ostringstream os;
  const Json j = to_json(c);
  os << c.first << " then " << c.second << "^-1, incidence " << c.incidence << " ("
     << to_string(c.placement) << ")\n";
  os << "  clause    " << c.clause << "\n";
  os << "  bidegree  " << bidegree_text(j["bidegree"]) << "\n";
  os << "  cyc       " << cyc_text(j["cyc"]) << "  (degree " << c.cyc_degree() << ")\n";
  os << "  base      " << c.base_description << "\n";
  for (const auto& s : c.secancy) {
    os << "  secancy   " << s.curve << ": degree " << s.on_blowup.first() << ", " << s.on_blowup.second()
       << "-secant\n";
  }
  std::string tags;
  for (Tag t : c.tags) tags += (tags.empty() ? "" : ",") + std::string(to_string(t));
  os << "  tags      " << (tags.empty() ? "-" : tags) << "\n";
  if (c.sr_type) os << "  SR type   " << *c.sr_type << "\n";
  return os.str();
}

std::string render_text(const std::vector<PureSpecialClass>& classes, const SrTable& sr) {
  std::ostringstream os;
  for (const auto& c : classes) {
    const Json j = to_json(c);
    std::string word;
    for (const auto& f : c.factors) word += (word.empty() ? "" : " ") + f;
    std::string bideg;
    for (const auto& b : j["bidegree"]) bideg += (bideg.empty() ? "" : " ") + bidegree_text(b);
    std::string tags;
    for (Tag t : c.tags) tags += (tags.empty() ? "" : ",") + std::string(to_string(t));
    os << c.id << "  " << std::left << std::setw(10) << word << std::setw(14) << (bideg.empty() ? "-" : bideg)
       << std::setw(40) << tags << c.description << "\n";
    for (const auto& k : c.cases) {
      os << "        incidence " << std::setw(3) << k.incidence << std::setw(16) << to_string(k.placement)
         << std::setw(8) << bidegree_text(to_json(k)["bidegree"]) << std::setw(24) << cyc_text(to_json(k)["cyc"])
         << (k.sr_type ? *k.sr_type : "") << "\n";
    }
  }
  os << "\nSR types not pure special:";
  for (const auto& t : sr.negative) os << " " << t;
  os << "\n";
  return os.str();
}

std::string render_text(const std::vector<ComboAuditRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << std::left << std::setw(28) << r.identity.label << std::setw(15) << to_string(r.verdict.kind)
       << "u*p - v*q = " << to_string(r.verdict.value);
    if (r.verdict.kind == ComboKind::Fails) os << "  (residual " << to_string(r.verdict.residual) << ")";
    if (r.flagged) os << "  FLAGGED";
    os << "\n";
  }
  return os.str();
}

std::string render_text(const std::vector<DPClass>& classes) {
  std::ostringstream os;
  for (const auto& c : classes) {
    os << std::left << std::setw(24) << to_string(c) << "K.C=" << std::setw(5) << c.k_dot()
       << "C^2=" << std::setw(5) << c.self_intersection() << "orbit " << orbit_size(c) << "\n";
  }
  if (classes.empty()) os << "(no classes)\n";
  return os.str();
}

}  // namespace fanolink
