// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "../support/oracles.hpp"
#include "fanolink/composer.hpp"
#include "fanolink/delpezzo.hpp"
#include "fanolink/divisor_expr.hpp"
#include "fanolink/report.hpp"

using namespace fanolink;

namespace {

using Triple = std::tuple<Int, Int, Int>;

struct Check {
  std::ostringstream failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures << (failures.tellp() > 0 ? "; " : "") << what;
  }
};

std::vector<Triple> triples(const SolveResult& r) {
  std::vector<Triple> out;
  for (const auto& c : r.candidates) out.emplace_back(c.m, c.n, c.d);
  return out;
}

const LinkCandidate* find(const SolveResult& r, Int m, Int n, Int d) {
  for (const auto& c : r.candidates)
    if (c.same_key(m, n, d)) return &c;
  return nullptr;
}

bool has(const LinkCandidate* c, ExclusionReason reason) {
  return c && std::any_of(c->reasons.begin(), c->reasons.end(), [&](const auto& x) { return x.reason == reason; });
}

void links(Check& c) {
  const auto result = classify_all();
  const std::tuple<std::string, Int, Int, Int, Int, Int> want[] = {
      {"L.1", 1, 3, 5, 2, 4}, {"L.2", 1, 3, 4, 0, 5}, {"L.3", 1, 2, 2, 0, 2},
      {"L.4", 1, 3, 5, 1, 2}, {"L.5", 1, 3, 6, 3, 1}};
  c.expect(result.links.size() == 5, "expected 5 links, got " + std::to_string(result.links.size()));
  for (std::size_t i = 0; i < std::min<std::size_t>(5, result.links.size()); ++i) {
    const auto& l = result.links[i];
    c.expect(std::tie(l.id, l.m, l.n, l.d, l.g, l.target.d0) == want[i], "mismatch at " + l.id);
  }
}

void raw_lists(Check& c) {
  c.expect(triples(solve_links(10, 6, Stage::Raw)) == std::vector<Triple>{{3, 7, 5}, {3, 10, 10}}, "(10,6)");
  c.expect(solve_links(12, 7, Stage::Raw).candidates.empty(), "(12,7)");
  c.expect(triples(solve_links(16, 9, Stage::Raw)) == std::vector<Triple>{{2, 4, 3}, {2, 6, 7}}, "(16,9)");
  c.expect(solve_links(18, 10, Stage::Raw).candidates.empty(), "(18,10)");
  c.expect(triples(solve_links(22, 12, Stage::Raw)) == std::vector<Triple>{{7, 16, 5}}, "(22,12)");
}

SolveResult filtered(Int d0, Int g0) {
  SolveOptions options;
  options.ledger = exclusion_ledger();
  return solve_links(d0, g0, Stage::Filtered, options);
}

void certificates(Check& c) {
  const auto x10 = filtered(10, 6), x16 = filtered(16, 9), x22 = filtered(22, 12);
  const auto* a = find(x10, 3, 10, 10);
  c.expect(has(a, ExclusionReason::NonIntegralE3) && a->e3_numerator == -1710 && a->e3_denominator == 27 &&
               a->e3_numerator % 27 != 0,
           "(3,10,10) E3");
  const auto* b = find(x22, 7, 16, 5);
  c.expect(has(b, ExclusionReason::NonIntegralE3) && b->e3_numerator == -7686 && b->e3_denominator == 343 &&
               b->e3_numerator % 343 != 0,
           "(7,16,5) E3");
  const auto* d = find(x10, 3, 7, 5);
  c.expect(has(d, ExclusionReason::ResidualGenusBound) && d->t == 4, "(3,7,5) residual genus");
  const auto* e = find(x16, 2, 4, 3);
  c.expect(has(e, ExclusionReason::ResidualGenusBound) && e->t == 4, "(2,4,3) residual genus");
  const auto* f = find(x16, 2, 6, 7);
  c.expect(f && f->reasons.size() == 1 && f->reasons[0].reason == ExclusionReason::Ledger, "(2,6,7) ledger only");
  const auto ledger = exclusion_ledger();
  c.expect(ledger.size() == 1 && ledger[0].machine_check(), "ledger machine check");
  c.expect(q_exceptional_class<Int>(6, 2, 1, 1) == DivisorClass{2, -1}, "F = 2H-E");
}

void lattice(Check& c) {
  auto eval = [](const char* text, Int d, Int g) {
    return evaluate(*parse_divisor_expr(text), {BlowupGeometry::make(d, g), std::nullopt});
  };
  c.expect(eval("(3H-E)^3", 4, 0) == 5, "(3H-E)^3 at (4,0)");
  c.expect(eval("(3H-E)^3", 5, 1) == 2, "(3H-E)^3 at (5,1)");
  c.expect(eval("(5H-2E)^2*(3H-E)", 5, 1) == -5, "F^2 H_Z");
  c.expect(eval("(5H-2E)^3", 5, 1) == -15, "F^3");
  c.expect(eval("E^3", 4, 0) == -14, "E^3");
  const auto frame = find_link("L.4").frame();
  const auto inv = basis_change(frame).inverse;
  c.expect(inv(0, 0) == 2 && inv(0, 1) == -1 && inv(1, 0) == 5 && inv(1, 1) == -3, "basis inverse");
  for (Int m = 0; m <= 10; ++m)
    c.expect(curve_degrees(TargetCurve{5, m}, frame) == BlowupCurve{10 - m, 25 - 3 * m}, "(5,m)");
  c.expect(curve_degrees(TargetCurve{0, -1}, frame) == BlowupCurve{1, 3}, "fiber");
}

void del_pezzo(Check& c) {
  auto as_set = [](const std::vector<DPClass>& v) {
    std::set<std::pair<Int, std::vector<Int>>> out;
    for (const auto& x : v) out.insert({x.a, x.b});
    return out;
  };
  const auto k4 = enumerate_classes(4, -2, 0);
  c.expect(k4 == std::vector<DPClass>{{1, {1, 0, 0, 0}}, {2, {1, 1, 1, 1}}}, "k=4 list");
  c.expect(as_set(k4) == oracle::brute_force_dp(4, -2, 0, 12, 12), "k=4 oracle");
  DPConstraints bounded;
  bounded.bmax = 2;
  const auto k5 = enumerate_classes(5, -5, 5, bounded);
  c.expect(k5 == std::vector<DPClass>{{3, {1, 1, 1, 1, 0}}, {4, {2, 2, 1, 1, 1}}, {5, {2, 2, 2, 2, 2}}},
           "k=5 list");
  c.expect(as_set(k5) == oracle::brute_force_dp(5, -5, 5, 12, 2), "k=5 oracle");
}

void compositions(Check& c) {
  struct Row {
    const char* a;
    const char* b;
    Int incidence;
    Placement placement;
    std::pair<Int, Int> bidegree;
    std::vector<std::pair<Int, Int>> cyc;
  };
  const Row rows[] = {
      {"L.4", "L.4", 0, Placement::General, {6, 6}, {{1, 10}, {4, 5}}},
      {"L.4", "L.4", 0, Placement::OnExceptional, {6, 6}, {{6, 5}}},
      {"L.3", "L.4", 0, Placement::General, {4, 3}, {{1, 5}, {4, 2}}},
      {"L.3", "L.4", 1, Placement::General, {3, 3}, {{1, 2}, {1, 4}}},
      {"L.4", "L.3", 0, Placement::General, {3, 4}, {{1, 5}}},
      {"L.4", "L.3", 1, Placement::General, {3, 3}, {{1, 1}, {1, 5}}},
      {"L.1", "L.1", 0, Placement::General, {3, 3}, {{1, 1}, {1, 5}}},
      {"L.1", "L.1", 1, Placement::General, {3, 3}, {{1, 1}, {1, 5}}},
      {"L.2", "L.2", 0, Placement::General, {3, 3}, {{1, 2}, {1, 4}}},
      {"L.3", "L.3", 0, Placement::General, {2, 2}, {{1, 2}}},
  };
  for (const auto& row : rows) {
    const std::string tag = std::string(row.a) + "/" + row.b + "/" + std::to_string(row.incidence);
    try {
      const auto r = compose(find_link(row.a), find_link(row.b), row.incidence, row.placement);
      std::vector<std::pair<Int, Int>> got;
      for (const auto& x : r.cyc) got.emplace_back(x.multiplicity, x.degree);
      std::sort(got.begin(), got.end());
      auto want = row.cyc;
      std::sort(want.begin(), want.end());
      c.expect(r.bidegree == row.bidegree, tag + " bidegree");
      c.expect(got == want, tag + " cyc");
      c.expect(r.bidegree.first * r.bidegree.first - r.bidegree.second == r.cyc_degree(), tag + " degree identity");
    } catch (const Error& e) {
      c.expect(false, tag + ": " + e.what());
    }
  }
  c.expect(enumerate_pure_special().size() == 12, "twelve classes");
}

void combos(Check& c) {
  for (const auto& row : audit_combos()) {
    const auto& label = row.identity.label;
    if (label.rfind("2(n-1)", 0) == 0) continue;
    c.expect(row.verdict.kind == ComboKind::Exact,
             label + " is " + std::string(to_string(row.verdict.kind)) + " (u*p - v*q = " +
                 to_string(row.verdict.value) + ")");
  }
  const auto rows = audit_combos();
  const auto variant = std::find_if(rows.begin(), rows.end(),
                                    [](const auto& r) { return r.identity.label == "2(n-1) difference variant"; });
  c.expect(variant != rows.end() && variant->verdict.kind == ComboKind::ExactUpToSign && variant->flagged,
           "linear identity as a difference");
  const auto printed = std::find_if(rows.begin(), rows.end(),
                                    [](const auto& r) { return r.identity.label == "2(n-1) as a sum"; });
  c.expect(printed != rows.end() && printed->verdict.kind != ComboKind::Exact && printed->flagged,
           "linear identity as a sum");
}

void properties(Check& c) {
  for (const auto& t : catalog()) {
    SolveOptions options;
    options.m_max_override = 500;
    const auto got = triples(solve_links(t.d0, t.g0, Stage::Raw, options));
    const std::set<Triple> mine(got.begin(), got.end());
    c.expect(mine == oracle::brute_force_links(t.d0, t.g0, 500), "oracle (" + std::to_string(t.d0) + "," +
                                                                     std::to_string(t.g0) + ")");
  }
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<Int> coef(-50, 50), deg(1, 15);
  for (int i = 0; i < 1000; ++i) {
    const Int d = deg(rng);
    const auto geom = BlowupGeometry::make(d, std::uniform_int_distribution<Int>(0, (d - 1) * (d - 2) / 2)(rng));
    const DivisorClass x{coef(rng), coef(rng)}, y{coef(rng), coef(rng)}, z{coef(rng), coef(rng)};
    const Int v = triple_product(x, y, z, geom);
    const bool same = v == triple_product(x, z, y, geom) && v == triple_product(y, x, z, geom) &&
                      v == triple_product(y, z, x, geom) && v == triple_product(z, x, y, geom) &&
                      v == triple_product(z, y, x, geom);
    if (!same) {
      c.expect(false, "permutation invariance");
      break;
    }
  }
  bool even = true;
  for (Int d = 1; d <= 40; ++d)
    for (Int g = 0; g <= (d - 1) * (d - 2) / 2; ++g) even &= BlowupGeometry::make(d, g).e_cubed() % 2 == 0;
  c.expect(even, "E^3 parity");
  for (const auto& link : link_records()) {
    for (int i = 0; i < 100; ++i) {
      const TargetCurve t{coef(rng), coef(rng)};
      if (!(curve_degrees(curve_degrees(t, link.frame()), link.frame()) == t)) {
        c.expect(false, "round trip " + link.id);
        break;
      }
    }
  }
  c.expect(render_json(build_report()) == render_json(build_report()), "determinism");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"five special links", links},
      {"raw solution lists for index one", raw_lists},
      {"exclusion certificates", certificates},
      {"lattice test vectors", lattice},
      {"del Pezzo enumerations", del_pezzo},
      {"composition table", compositions},
      {"divisibility identity audit", combos},
      {"property suite", properties},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    Check check;
    try {
      run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const std::string why = check.failures.str();
    std::cout << (why.empty() ? "PASS" : "FAIL") << "  criterion " << ++index << ": " << name
              << (why.empty() ? "" : "  [" + why + "]") << "\n";
    failed += !why.empty();
  }
  std::cout << (8 - failed) << "/8 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
