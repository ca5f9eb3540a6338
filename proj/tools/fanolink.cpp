#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fanolink/divisor_expr.hpp"
#include "fanolink/error.hpp"
#include "fanolink/report.hpp"

using namespace fanolink;

namespace {

enum class Format { Text, Json };

const std::map<std::string, Format> kFormats{{"text", Format::Text}, {"json", Format::Json}};

void emit(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + out_path);
  out << bytes;
}

bool is_catalog_row(Int d0, Int g0) {
  for (const auto& t : catalog()) {
    if (t.d0 == d0 && t.g0 == g0) return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of special links from P^3 and their Cremona compositions"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  // classify
  bool strict = false;
  Format classify_format = Format::Text;
  std::string out_path;
  auto* classify = app.add_subcommand("classify", "solve every catalog row and print the full report");
  classify->add_flag("--strict-castelnuovo", strict, "use Castelnuovo's bound for the residual curve");
  classify->add_option("--format", classify_format)->transform(CLI::CheckedTransformer(kFormats));
  classify->add_option("--out", out_path, "write to FILE instead of stdout");

  // solve
  Int d0 = 0, g0 = 0;
  std::string stage_name = "filtered";
  std::optional<Int> mmax;
  Format solve_format = Format::Text;
  auto* solve = app.add_subcommand("solve", "list solutions (m,n,d) of the link equations");
  solve->add_option("--d0", d0)->required()->check(CLI::PositiveNumber);
  solve->add_option("--g0", g0)->required()->check(CLI::NonNegativeNumber);
  solve->add_option("--stage", stage_name)->check(CLI::IsMember({"raw", "filtered"}));
  solve->add_option("--mmax", mmax)->check(CLI::PositiveNumber);
  solve->add_option("--format", solve_format)->transform(CLI::CheckedTransformer(kFormats));

  // mbound
  auto* mbound = app.add_subcommand("mbound", "resultant bound on m");
  mbound->add_option("--d0", d0)->required()->check(CLI::PositiveNumber);
  mbound->add_option("--g0", g0)->required()->check(CLI::NonNegativeNumber);

  // lattice
  std::string expr_text;
  std::optional<Int> lat_d, lat_g;
  std::string link_id;
  auto* lattice = app.add_subcommand("lattice", "evaluate a degree-3 intersection number on the blow-up");
  lattice->add_option("--expr", expr_text)->required();
  lattice->add_option("--d", lat_d);
  lattice->add_option("--g", lat_g);
  lattice->add_option("--link", link_id, "L.1 .. L.5; enables H_Z and F");

  // compose
  std::string first_id, second_id, placement_name = "general";
  Int incidence = 0;
  Format compose_format = Format::Text;
  auto* compose_cmd = app.add_subcommand("compose", "compose chi2^-1 o chi1 for two links onto one target");
  compose_cmd->add_option("--first", first_id)->required();
  compose_cmd->add_option("--second", second_id)->required();
  compose_cmd->add_option("--incidence", incidence)->required();
  compose_cmd->add_option("--placement", placement_name)->check(CLI::IsMember({"general", "exceptional"}));
  compose_cmd->add_option("--format", compose_format)->transform(CLI::CheckedTransformer(kFormats));

  // dp
  int points = 0;
  Int kc = 0, c2 = 0;
  DPConstraints dp_constraints;
  auto* dp = app.add_subcommand("dp", "curve classes on a del Pezzo surface with given K.C and C^2");
  dp->add_option("--points", points)->required()->check(CLI::Range(1, 9));
  dp->add_option("--kc", kc)->required();
  dp->add_option("--c2", c2)->required();
  dp->add_option("--bmax", dp_constraints.bmax);
  dp->add_flag("--pair-bound", dp_constraints.pair_bound);
  dp->add_flag("--allow-exceptional", dp_constraints.allow_exceptional);

  Format cremona_format = Format::Text;
  auto* cremona = app.add_subcommand("cremona", "the twelve pure special classes with SR types");
  cremona->add_option("--format", cremona_format)->transform(CLI::CheckedTransformer(kFormats));

  Format audit_format = Format::Text;
  auto* audit = app.add_subcommand("audit-combos", "check the divisibility identities symbolically");
  audit->add_option("--format", audit_format)->transform(CLI::CheckedTransformer(kFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*classify) {
      const Json report = build_report({strict});
      emit(classify_format == Format::Json ? render_json(report) : render_text_report(report), out_path);
    } else if (*solve) {
      const Stage stage = stage_name == "raw" ? Stage::Raw : Stage::Filtered;
      SolveOptions options;
      options.m_max_override = mmax;
      const bool known = is_catalog_row(d0, g0);
      if (known) options.ledger = exclusion_ledger();
      SolveResult result = solve_links(d0, g0, stage, options);
      if (known && stage == Stage::Filtered) annotate_cited_reasons(result);
      std::cout << (solve_format == Format::Json ? render_json(to_json(result)) : render_text(result));
    } else if (*mbound) {
      const Int bound = m_bound(d0, g0);
      std::cout << "resultant " << to_string_wide(condition_resultant(d0, g0)) << "\n"
                << "m <= " << bound << " and m divides it\n";
    } else if (*lattice) {
      std::optional<LinkFrame> frame;
      if (!link_id.empty()) {
        const LinkRecord& link = find_link(link_id);
        frame = link.frame();
        if (!lat_d) lat_d = link.d;
        if (!lat_g) lat_g = link.g;
      }
      if (!lat_d || !lat_g) throw Error(ErrorCode::InvalidArgument, "--d and --g are required without --link");
      const ExprPtr expr = parse_divisor_expr(expr_text);
      std::cout << evaluate(*expr, {BlowupGeometry::make(*lat_d, *lat_g), frame}) << "\n";
    } else if (*compose_cmd) {
      const Placement placement = placement_name == "exceptional" ? Placement::OnExceptional : Placement::General;
      const auto result = compose(find_link(first_id), find_link(second_id), incidence, placement);
      std::cout << (compose_format == Format::Json ? render_json(to_json(result)) : render_text(result));
    } else if (*dp) {
      std::cout << render_text(enumerate_classes(points, kc, c2, dp_constraints));
    } else if (*cremona) {
      const auto classes = enumerate_pure_special();
      if (cremona_format == Format::Json) {
        Json j = Json::array();
        for (const auto& c : classes) j.push_back(to_json(c));
        std::cout << render_json({{"cremona_classes", j}, {"sr_table", to_json(sr_tags())}});
      } else {
        std::cout << render_text(classes, sr_tags());
      }
    } else if (*audit) {
      const auto rows = audit_combos();
      if (audit_format == Format::Json) {
        Json j = Json::array();
        for (const auto& r : rows) j.push_back(to_json(r));
        std::cout << render_json(j);
      } else {
        std::cout << render_text(rows);
      }
    }
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << to_string(e.code()) << " at position " << e.position() << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.exit_code();
  }
  return 0;
}
