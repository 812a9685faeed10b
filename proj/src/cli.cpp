#include "gwt/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwt/errors.hpp"
#include "gwt/orientability.hpp"
#include "gwt/plane.hpp"
#include "gwt/tangency.hpp"
#include "gwt/verify.hpp"

namespace gwt {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string field = "gf(7)";
  std::string poly;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "table";
};

int default_jobs() {
  if (const char* env = std::getenv("GWTANGENT_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string point_string(const std::vector<Elem>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + p[i].to_string();
  return s + "]";
}

std::string square_class_string(const Elem& x) {
  const SquareClass c = square_class(x);
  if (x.field().kind() == FieldKind::rational) return c.squarefree.get_str();
  return c.sign > 0 ? "square" : "nonsquare";
}

std::string disc_string(const GWInvariants& inv) {
  if (inv.signature) return inv.disc.squarefree.get_str();
  return inv.disc.sign > 0 ? "1" : "-1";
}

Json gw_record(const GWClass& c) {
  const GWInvariants inv = invariants(c);
  Json j;
  j["field"] = c.field().to_string();
  j["rank"] = inv.rank;
  j["disc"] = disc_string(inv);
  if (inv.signature) j["signature"] = *inv.signature;
  Json diag = Json::array();
  for (const auto& e : c.positive()) diag.push_back(e.to_string());
  j["diagonal"] = diag;
  if (!c.negative().empty()) {
    Json neg = Json::array();
    for (const auto& e : c.negative()) neg.push_back(e.to_string());
    j["subtracted"] = neg;
  }
  j["class"] = c.to_string();
  return j;
}

void print_gw_table(std::ostream& out, const GWClass& c) {
  const GWInvariants inv = invariants(c);
  out << "class: " << c.to_string() << "\n";
  out << "rank: " << inv.rank << "\n";
  out << "disc: " << disc_string(inv) << "\n";
  if (inv.signature) out << "signature: " << *inv.signature << "\n";
}

MultiPoly plane_curve(const Common& c, const Field& f) {
  MultiPoly F = MultiPoly::parse(c.poly, f, 3);
  require_plane_curve(F);
  return F;
}

void header(std::ostream& out, const std::string& cmd, const Common& c) {
  out << "# gwtangent " << cmd << " field=" << c.field << " seed=" << c.seed << "\n";
  out << "# F = " << c.poly << "\n";
}

Json json_header(const std::string& cmd, const Common& c) {
  Json j;
  j["command"] = cmd;
  j["field"] = c.field;
  j["seed"] = c.seed;
  j["polynomial"] = c.poly;
  return j;
}

int cmd_scan(std::ostream& out, long max_r, long max_m, long max_n, int jobs, const std::string& format) {
  const auto tuples = scan(max_r, max_m, max_n, jobs);
  if (format == "json") {
    Json j;
    j["command"] = "scan";
    j["bounds"] = {max_r, max_m, max_n};
    Json rows = Json::array();
    for (const auto& t : tuples) rows.push_back({{"r", t.r}, {"m", t.m}, {"n", t.n}, {"d", to_string(t.d)}});
    j["tuples"] = rows;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& t : tuples) out << t.r << " " << t.m << " " << t.n << " " << to_string(t.d) << "\n";
  return kExitOk;
}

int cmd_flexes(std::ostream& out, const Common& c) {
  const Field f = Field::parse(c.field);
  const MultiPoly F = plane_curve(c, f);
  const FlexCount fc = enriched_flex_count(F, c.seed);
  if (c.format == "json") {
    Json j = json_header("flexes", c);
    if (fc.contact) j["contact_line"] = point_string(*fc.contact);
    Json rows = Json::array();
    for (const auto& r : fc.reports)
      rows.push_back({{"point", point_string(r.point.coords)},
                      {"residue_degree", r.point.residue_degree},
                      {"multiplicity", r.multiplicity},
                      {"iii", r.iii_value.to_string()},
                      {"iii_class", square_class_string(r.iii_value)},
                      {"index", gw_record(r.index)}});
    j["flexes"] = rows;
    j["total"] = gw_record(fc.total);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  header(out, "flexes", c);
  if (fc.contact) out << "# oriented by contact line " << point_string(*fc.contact) << "\n";
  out << "point\tresidue_degree\tmultiplicity\tIII\tindex\n";
  for (const auto& r : fc.reports)
    out << point_string(r.point.coords) << "\t" << r.point.residue_degree << "\t" << r.multiplicity << "\t"
        << square_class_string(r.iii_value) << "\t" << r.index.to_string() << "\n";
  out << "# " << fc.reports.size() << " points, total rank " << fc.rank << "\n";
  return kExitOk;
}

std::string comparison(const FlexCount& fc, int d) {
  if (d % 2 != 0) return "skipped: odd degree, no relative orientation";
  const std::string target = std::to_string(fc.expected_multiple) + "H";
  if (!fc.contact) return "unoriented: no rational contact line; " + std::string(*fc.matches ? "matches " : "differs from ") + target;
  if (*fc.matches) return "matches " + target;
  return "differs from " + target + " (theta characteristic observation)";
}

int cmd_count(std::ostream& out, const Common& c, const std::string& method,
              std::optional<std::uint64_t> divisor_seed) {
  const Field f = Field::parse(c.field);
  const MultiPoly F = plane_curve(c, f);
  const int d = F.total_degree();
  Json j = json_header("count", c);
  j["method"] = method;
  if (method == "fundamental-forms") {
    const FlexCount fc = enriched_flex_count(F, c.seed);
    const std::string cmp = comparison(fc, d);
    if (c.format == "json") {
      j["count"] = gw_record(fc.total);
      if (fc.contact) j["contact_line"] = point_string(*fc.contact);
      j["expected"] = d % 2 == 0 ? Json(std::to_string(fc.expected_multiple) + "H") : Json(nullptr);
      j["comparison"] = cmp;
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    header(out, "count", c);
    out << "method: fundamental-forms\n";
    print_gw_table(out, fc.total);
    if (fc.contact) out << "contact line: " << point_string(*fc.contact) << "\n";
    out << "comparison: " << cmp << "\n";
    return kExitOk;
  }
  const TangencyCount tc = enriched_count_n2(F, c.seed, divisor_seed);
  if (c.format == "json") {
    j["divisor_seed"] = divisor_seed ? Json(*divisor_seed) : Json(nullptr);
    j["coordinate_changes"] = tc.coordinate_changes;
    j["curve"] = tc.curve.to_string();
    Json zeros = Json::array();
    for (const auto& r : tc.reports)
      zeros.push_back({{"point", point_string(r.pointed_line.point())},
                       {"line", r.pointed_line.to_string()},
                       {"residue_degree", r.residue_degree},
                       {"chart", r.chart_used.to_string()},
                       {"wronskian", r.wronskian_value.to_string()},
                       {"index", gw_record(r.index)}});
    j["zeros"] = zeros;
    j["count"] = gw_record(tc.total);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  header(out, "count", c);
  out << "method: wronskian\n";
  if (divisor_seed) out << "divisor seed: " << *divisor_seed << ", coordinate changes: " << tc.coordinate_changes << "\n";
  print_gw_table(out, tc.total);
  return kExitOk;
}

int cmd_index(std::ostream& out, const Common& c, const std::string& line) {
  const Field f = Field::parse(c.field);
  const PointedLine pl = PointedLine::parse(line, f);
  const MultiPoly F = MultiPoly::parse(c.poly, f, pl.n() + 1);
  const LocalIndexReport r = wronskian_index(F, pl);
  if (c.format == "json") {
    Json j = json_header("index", c);
    j["point"] = point_string(pl.point());
    j["line"] = pl.to_string();
    j["residue_degree"] = r.residue_degree;
    j["chart"] = r.chart_used.to_string();
    j["wronskian"] = r.wronskian_value.to_string();
    j["orientation"] = r.orientation.to_string();
    j["on_divisor"] = r.on_divisor;
    j["index"] = gw_record(r.index);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  header(out, "index", c);
  out << "line: " << pl.to_string() << "\n";
  out << "chart: " << r.chart_used.to_string() << "\n";
  out << "wronskian: " << r.wronskian_value.to_string() << "\n";
  out << "orientation: " << r.orientation.to_string() << (r.on_divisor ? " (on divisor)" : "") << "\n";
  print_gw_table(out, r.index);
  return kExitOk;
}

int cmd_verify(std::ostream& out, const std::string& property, VerifyOptions opt,
               const std::string& field, const std::string& format) {
  const auto p = parse_property(property);
  if (!p) throw std::invalid_argument("unknown property " + property);
  if (!field.empty()) opt.field = Field::parse(field);
  const VerifyResult r = verify(*p, opt);
  if (format == "json") {
    Json j;
    j["command"] = "verify";
    j["property"] = property;
    j["seed"] = opt.seed;
    j["trials"] = r.trials;
    j["checks"] = r.checks;
    j["failures"] = r.failures;
    j["passed"] = r.passed();
    if (!r.passed()) j["counterexample"] = r.first_counterexample;
    out << j.dump(2) << "\n";
  } else {
    out << "# gwtangent verify property=" << property << " seed=" << opt.seed << "\n";
    out << property << ": " << r.trials << " trials, " << r.checks << " checks, " << r.failures
        << " failures: " << (r.passed() ? "PASS" : "FAIL") << "\n";
    if (!r.passed()) out << "counterexample: " << r.first_counterexample << "\n";
  }
  return r.passed() ? kExitOk : kExitInconsistency;
}

void add_common(CLI::App* sub, Common& c, bool needs_poly) {
  sub->add_option("--field", c.field, "gf(p), gf(p^e) or rational")->capture_default_str();
  auto* poly = sub->add_option("--poly,-F", c.poly, "homogeneous polynomial in x0, x1, ...");
  if (needs_poly) poly->required();
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
  sub->add_option("--format", c.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enriched counts of highly tangent lines", "gwtangent"};
  app.require_subcommand(1);
  Common common;

  auto* scan_cmd = app.add_subcommand("scan", "relatively orientable (r, m, n) tuples");
  long max_r = 5000, max_m = 5000, max_n = 5000;
  int jobs = default_jobs();
  std::string scan_format = "table";
  scan_cmd->add_option("--max-r", max_r)->check(CLI::PositiveNumber)->capture_default_str();
  scan_cmd->add_option("--max-m", max_m)->check(CLI::PositiveNumber)->capture_default_str();
  scan_cmd->add_option("--max-n", max_n)->check(CLI::PositiveNumber)->capture_default_str();
  scan_cmd->add_option("--jobs,-j", jobs, "worker threads (default from GWTANGENT_JOBS)")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--format", scan_format)->check(CLI::IsMember({"table", "json"}));

  auto* flexes_cmd = app.add_subcommand("flexes", "inflection points and their local indices");
  add_common(flexes_cmd, common, true);

  auto* count_cmd = app.add_subcommand("count", "enriched count of flex lines");
  add_common(count_cmd, common, true);
  std::string method = "fundamental-forms";
  std::optional<std::uint64_t> divisor_seed;
  count_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"wronskian", "fundamental-forms"}))
      ->capture_default_str();
  count_cmd->add_option("--divisor-seed", divisor_seed, "move the curve off the orienting divisor");

  auto* verify_cmd = app.add_subcommand("verify", "randomized exact identity checks");
  std::string property, verify_field, verify_format = "table";
  VerifyOptions vopt;
  vopt.seed = kDefaultSeed;
  std::optional<int> vn, vdeg;
  verify_cmd->add_option("--property", property)
      ->required()
      ->check(CLI::IsMember({"wronskian-jacobian", "transition", "taylor", "gw-laws"}));
  verify_cmd->add_option("--trials", vopt.trials)->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_option("--seed", vopt.seed)->capture_default_str();
  verify_cmd->add_option("--field", verify_field);
  verify_cmd->add_option("--n", vn)->check(CLI::Range(2, 6));
  verify_cmd->add_option("--degree", vdeg)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"table", "json"}));
  verify_cmd->add_flag("--corrupt-closed-form", vopt.corrupt)->group("");

  auto* index_cmd = app.add_subcommand("index", "local index at one pointed line");
  add_common(index_cmd, common, true);
  std::string line;
  index_cmd->add_option("--line", line, "\"a b c / d e f ; y1 y2\"")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << app.help();
    return kExitUsage;
  }

  try {
    if (scan_cmd->parsed()) return cmd_scan(out, max_r, max_m, max_n, jobs, scan_format);
    if (flexes_cmd->parsed()) return cmd_flexes(out, common);
    if (count_cmd->parsed()) return cmd_count(out, common, method, divisor_seed);
    if (index_cmd->parsed()) return cmd_index(out, common, line);
    vopt.n = vn;
    vopt.degree = vdeg;
    return cmd_verify(out, property, vopt, verify_field, verify_format);
  } catch (const HypothesisError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistency;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInconsistency;
  }
}

}  // namespace gwt
