// bipolar-scale algebra command line tool: evaluate expressions over a
// configured pseudo-addition/multiplication, run law audits, dump operation
// tables, and search for counterexamples.
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsa/expression.hpp"
#include "bsa/registry.hpp"
#include "bsa/report_io.hpp"

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string conorm = "prob_sum";
  std::string norm = "product";
  std::string boundary = "plus_one";
  std::uint64_t seed = 0x5eedULL;
  int grid = 21;
  long long random_count = 1000;
  double tol = 1e-9;
  std::string format = "json";
  std::string out;
  std::string config_path;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--conorm", opt.conorm, "t-conorm spec for (+)");
  cmd->add_option("--norm", opt.norm, "t-norm spec for (*)");
  cmd->add_option("--boundary", opt.boundary, "value of 1 (+) (-1)")
      ->check(CLI::IsMember({"plus_one", "minus_one"}));
  cmd->add_option("--seed", opt.seed, "sampling seed");
  cmd->add_option("--grid", opt.grid, "grid resolution per axis");
  cmd->add_option("--random", opt.random_count, "number of random samples");
  cmd->add_option("--tol", opt.tol, "violation tolerance");
  cmd->add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
  cmd->add_option("--config", opt.config_path, "key=value file mirroring these flags");
}

// Applies config-file values for every option the command line left at its
// default; explicit flags always win.
void load_config(const CLI::App* cmd, CommonOptions& opt) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) throw bsa::ConfigError("cannot read config file: " + opt.config_path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw bsa::ConfigError(opt.config_path + ":" + std::to_string(line_no) +
                             ": expected key=value");
    const std::string key = line.substr(start, eq - start);
    const std::string value = line.substr(eq + 1);
    static const std::set<std::string> known{"conorm", "norm",   "boundary",
                                            "seed",   "grid",   "random",
                                            "tol",    "format", "out"};
    if (!known.count(key))
      throw bsa::ConfigError(opt.config_path + ":" + std::to_string(line_no) +
                             ": unknown key '" + key + "'");
    if (cmd->count("--" + key) > 0) continue;  // flag overrides file
    if (key == "conorm") opt.conorm = value;
    else if (key == "norm") opt.norm = value;
    else if (key == "boundary") opt.boundary = value;
    else if (key == "seed") opt.seed = std::stoull(value);
    else if (key == "grid") opt.grid = std::stoi(value);
    else if (key == "random") opt.random_count = std::stoll(value);
    else if (key == "tol") opt.tol = std::stod(value);
    else if (key == "format") opt.format = value;
    else if (key == "out") opt.out = value;
  }
  if (opt.boundary != "plus_one" && opt.boundary != "minus_one")
    throw bsa::ConfigError("boundary must be plus_one or minus_one");
  bsa::parse_format(opt.format);  // validates
}

bsa::BoundaryConvention boundary_of(const CommonOptions& opt) {
  return opt.boundary == "minus_one" ? bsa::BoundaryConvention::minus_one
                                     : bsa::BoundaryConvention::plus_one;
}

bsa::SamplingPlan plan_of(const CommonOptions& opt) {
  bsa::SamplingPlan plan;
  plan.seed = opt.seed;
  plan.grid_resolution = opt.grid;
  plan.random_count = opt.random_count;
  plan.tolerance_value = opt.tol;
  plan.tolerance_generator = opt.tol;
  return plan;
}

void emit(const CommonOptions& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(opt.out);
  if (!os) throw bsa::ConfigError("cannot open output file: " + opt.out);
  os << payload;
  if (!payload.empty() && payload.back() != '\n') os << '\n';
}

// --- eval ------------------------------------------------------------------

int run_eval(const CommonOptions& opt, const std::string& expression) {
  bsa::EvalContext ctx{bsa::resolve_pseudo_addition(opt.conorm, boundary_of(opt)),
                       bsa::PseudoMultiplication{bsa::resolve_norm(opt.norm)}};
  const bsa::ExprPtr ast = bsa::parse_expression(expression);
  const bsa::FoldResult result = bsa::eval_expression(*ast, ctx);

  std::ostringstream text;
  text.precision(17);
  json j;
  j["expression"] = bsa::print_expression(*ast);
  if (const auto* v = std::get_if<double>(&result)) {
    j["result"] = *v;
    j["undefined"] = nullptr;
    text << *v;
  } else {
    const auto& u = std::get<bsa::UndefinedAggregate>(result);
    j["result"] = nullptr;
    j["undefined"] = {{"lo", u.lo}, {"hi", u.hi}};
    text << "undefined (bracketing-dependent, range [" << u.lo << ", " << u.hi << "])";
  }
  emit(opt, opt.format == "json" ? j.dump(2) : text.str());
  return 0;
}

// --- audit -----------------------------------------------------------------

bsa::LawKind law_by_name(const std::string& name) {
  using bsa::LawKind;
  for (LawKind k : {LawKind::commutativity, LawKind::associativity, LawKind::neutral,
                    LawKind::absorbing, LawKind::monotonicity, LawKind::symmetry_inverse,
                    LawKind::distributivity, LawKind::de_morgan})
    if (bsa::law_name(k) == name) return k;
  throw bsa::ConfigError("unknown law: " + name);
}

using NamedReports = std::vector<std::pair<std::string, bsa::PropertyReport>>;

std::string render_all(const NamedReports& reports, bsa::ReportFormat format) {
  if (format == bsa::ReportFormat::json) {
    json arr = json::array();
    for (const auto& [name, rep] : reports) {
      json j = json::parse(bsa::report_to_json(rep));
      j["name"] = name;
      arr.push_back(std::move(j));
    }
    return arr.dump(2);
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (format == bsa::ReportFormat::text) os << reports[i].first << ": ";
    std::string body = bsa::render_report(reports[i].second, format);
    if (format == bsa::ReportFormat::csv && i > 0) {
      // drop the repeated header line
      body.erase(0, body.find('\n') + 1);
    }
    os << body;
  }
  return os.str();
}

// --expect grammar: "holds" / "fails" applies to every report; a
// comma-separated list of name:verdict entries pins individual laws.
int check_expectations(const NamedReports& reports, const std::string& expect) {
  if (expect.empty()) return 0;
  auto verdict_matches = [&](const bsa::PropertyReport& r, const std::string& v) {
    if (v == "holds") return r.holds;
    if (v == "fails") return !r.holds;
    throw bsa::ConfigError("expectation verdict must be holds or fails, got: " + v);
  };
  std::stringstream ss(expect);
  std::string item;
  bool ok = true;
  while (std::getline(ss, item, ',')) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) {
      for (const auto& [name, rep] : reports)
        if (!verdict_matches(rep, item)) {
          std::cerr << "expectation failed: " << name << " does not " << item << '\n';
          ok = false;
        }
    } else {
      const std::string name = item.substr(0, colon);
      const std::string verdict = item.substr(colon + 1);
      bool found = false;
      for (const auto& [n, rep] : reports)
        if (n == name) {
          found = true;
          if (!verdict_matches(rep, verdict)) {
            std::cerr << "expectation failed: " << n << " does not " << verdict << '\n';
            ok = false;
          }
        }
      if (!found) throw bsa::ConfigError("expectation names unknown report: " + name);
    }
  }
  return ok ? 0 : 1;
}

int run_audit(const CommonOptions& opt, const std::string& kind, const std::string& op_spec,
              const std::string& law, const std::string& expect) {
  const bsa::SamplingPlan plan = plan_of(opt);
  NamedReports reports;

  if (kind == "group") {
    const auto p = bsa::resolve_pseudo_addition(opt.conorm, boundary_of(opt));
    const auto r = bsa::audit_abelian_group(p, plan);
    reports = {{"commutativity", r.commutativity},
               {"associativity", r.associativity},
               {"neutral", r.neutral},
               {"inverses", r.inverses}};
  } else if (kind == "ring") {
    const auto p = bsa::resolve_pseudo_addition(opt.conorm, boundary_of(opt));
    const bsa::PseudoMultiplication m{bsa::resolve_norm(opt.norm)};
    const auto r = bsa::audit_ring(p, m, plan);
    reports = {{"commutativity", r.group.commutativity},
               {"associativity", r.group.associativity},
               {"neutral", r.group.neutral},
               {"inverses", r.group.inverses},
               {"mul_associativity", r.mul_associativity},
               {"mul_neutral", r.mul_neutral},
               {"distributivity", r.distributivity}};
  } else if (kind == "oag") {
    bsa::OAGStructure s;
    if (op_spec == "svee")
      s = bsa::oag_sym_max();
    else
      s = bsa::oag_from_pseudo_addition(
          bsa::resolve_pseudo_addition(op_spec.empty() ? opt.conorm : op_spec,
                                       boundary_of(opt)));
    const auto r = bsa::audit_oag(s, plan, /*extended=*/true);
    reports = {{"i1_commutativity", r.i1_commutativity},
               {"i2_associativity", r.i2_associativity},
               {"i3_neutral", r.i3_neutral},
               {"i4_inverse", r.i4_inverse},
               {"i5_translation", r.i5_translation}};
    if (r.extremal_absorbing) reports.emplace_back("extremal_absorbing", *r.extremal_absorbing);
    if (r.negation_swaps_bounds)
      reports.emplace_back("negation_swaps_bounds", *r.negation_swaps_bounds);
    if (r.closure) reports.emplace_back("nonextremal_closure", *r.closure);
  } else if (kind == "law") {
    if (law.empty()) throw bsa::ConfigError("audit law requires --law");
    const bsa::AuditableOp op =
        bsa::resolve_op(op_spec.empty() ? opt.conorm : op_spec, boundary_of(opt));
    bsa::LawSpec spec{law_by_name(law), bsa::RegionKind::full};
    if (spec.law == bsa::LawKind::neutral)
      spec.constant = op.domain_lo < 0.0 ? 0.0 : op.label == "umax" ? 0.5 : 0.0;
    if (spec.law == bsa::LawKind::distributivity)
      spec.second = bsa::resolve_op("svee", boundary_of(opt));
    reports = {{law, bsa::check_law(op, spec, plan)}};
  } else {
    throw bsa::ConfigError("audit kind must be group, ring, oag or law, got: " + kind);
  }

  emit(opt, render_all(reports, bsa::parse_format(opt.format)));
  return check_expectations(reports, expect);
}

// --- table -----------------------------------------------------------------

int run_table(const CommonOptions& opt, const std::string& op_spec, int resolution) {
  if (resolution < 2 || resolution > 1001)
    throw bsa::ConfigError("table resolution must lie in [2, 1001]");
  const bsa::AuditableOp op = bsa::resolve_op(op_spec, boundary_of(opt));
  const std::vector<double> axis = bsa::linspace(op.domain_lo, op.domain_hi, resolution);
  std::ostringstream os;
  os.precision(17);
  os << op.label;
  for (double y : axis) os << ',' << y;
  os << '\n';
  for (double x : axis) {
    os << x;
    for (double y : axis) os << ',' << op.eval(x, y);
    os << '\n';
  }
  emit(opt, os.str());
  return 0;
}

// --- search ----------------------------------------------------------------

int run_search(const CommonOptions& opt, const std::string& op_spec, const std::string& law,
               long long budget) {
  const bsa::AuditableOp op = bsa::resolve_op(op_spec, boundary_of(opt));
  bsa::LawSpec spec{law_by_name(law), bsa::RegionKind::full};
  if (spec.law == bsa::LawKind::distributivity)
    spec.second = bsa::resolve_op("svee", boundary_of(opt));
  const auto witness = bsa::search_counterexample(op, spec, budget, opt.seed);

  json j;
  j["law"] = law;
  j["op"] = op.label;
  j["budget"] = budget;
  std::ostringstream text;
  text.precision(17);
  if (witness) {
    j["witness"] = {{"inputs", witness->inputs},
                    {"lhs", witness->lhs},
                    {"rhs", witness->rhs},
                    {"gap", witness->gap}};
    text << "counterexample: (";
    for (std::size_t i = 0; i < witness->inputs.size(); ++i)
      text << (i ? ", " : "") << witness->inputs[i];
    text << ")  lhs=" << witness->lhs << "  rhs=" << witness->rhs
         << "  gap=" << witness->gap;
  } else {
    j["witness"] = nullptr;
    text << "no counterexample within budget";
  }
  emit(opt, opt.format == "json" ? j.dump(2) : text.str());
  return witness ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipolar-scale algebra toolkit"};
  app.require_subcommand(1);

  CommonOptions opt;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
  std::string expression;
  eval_cmd->add_option("expression", expression, "expression text")->required();
  add_common(eval_cmd, opt);

  auto* audit_cmd = app.add_subcommand("audit", "audit algebraic laws");
  std::string audit_kind, audit_op, audit_law, expect;
  audit_cmd->add_option("kind", audit_kind, "group | ring | oag | law")->required();
  audit_cmd->add_option("--op", audit_op, "operator spec (law/oag audits)");
  audit_cmd->add_option("--law", audit_law, "law name (law audit)");
  audit_cmd->add_option("--expect", expect, "holds | fails | name:verdict[,...]");
  add_common(audit_cmd, opt);

  auto* table_cmd = app.add_subcommand("table", "dump an operation table");
  std::string table_op;
  int resolution = 11;
  table_cmd->add_option("op", table_op, "operator spec")->required();
  table_cmd->add_option("--resolution", resolution, "grid points per axis (<= 1001)");
  add_common(table_cmd, opt);

  auto* search_cmd = app.add_subcommand("search", "search for a counterexample");
  std::string search_op, search_law;
  long long budget = 10000;
  search_cmd->add_option("--op", search_op, "operator spec")->required();
  search_cmd->add_option("--law", search_law, "law name")->required();
  search_cmd->add_option("--budget", budget, "maximum samples");
  add_common(search_cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const CLI::App* cmd : {eval_cmd, audit_cmd, table_cmd, search_cmd})
      if (*cmd) load_config(cmd, opt);
    if (*eval_cmd) return run_eval(opt, expression);
    if (*audit_cmd) return run_audit(opt, audit_kind, audit_op, audit_law, expect);
    if (*table_cmd) return run_table(opt, table_op, resolution);
    if (*search_cmd) return run_search(opt, search_op, search_law, budget);
  } catch (const bsa::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const bsa::SyntaxError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const bsa::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
