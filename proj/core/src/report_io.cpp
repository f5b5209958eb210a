#include "bsa/report_io.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bsa/errors.hpp"

namespace bsa {

using nlohmann::json;

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw ConfigError("unknown report format: " + name);
}

namespace {

json plan_to_json(const SamplingPlan& plan) {
  return json{{"grid_resolution", plan.grid_resolution},
              {"random_count", plan.random_count},
              {"seed", plan.seed},
              {"corner_set", plan.corner_set},
              {"tolerance_value", plan.tolerance_value},
              {"tolerance_generator", plan.tolerance_generator}};
}

json witness_to_json(const std::optional<Counterexample>& w) {
  if (!w) return nullptr;
  return json{{"inputs", w->inputs}, {"lhs", w->lhs}, {"rhs", w->rhs}, {"gap", w->gap}};
}

json report_to_json_object(const PropertyReport& r) {
  return json{{"law", r.law},
              {"domain", r.domain},
              {"plan", plan_to_json(r.plan)},
              {"verdict", r.holds ? "holds_on_samples" : "fails"},
              {"max_violation", r.max_violation},
              {"witness", witness_to_json(r.witness)},
              {"samples_evaluated", r.samples_evaluated},
              {"engine_version", kEngineVersion}};
}

}  // namespace

std::string report_to_json(const PropertyReport& report) {
  return report_to_json_object(report).dump(2);
}

std::string report_to_csv(const PropertyReport& report) {
  std::ostringstream os;
  os.precision(17);
  os << "law,domain,verdict,max_violation,samples_evaluated,witness_inputs,witness_lhs,"
        "witness_rhs,witness_gap\n";
  os << report.law << ',' << report.domain << ','
     << (report.holds ? "holds_on_samples" : "fails") << ',' << report.max_violation << ','
     << report.samples_evaluated << ',';
  if (report.witness) {
    os << '"';
    for (std::size_t i = 0; i < report.witness->inputs.size(); ++i)
      os << (i ? ";" : "") << report.witness->inputs[i];
    os << "\"," << report.witness->lhs << ',' << report.witness->rhs << ','
       << report.witness->gap;
  } else {
    os << ",,,";
  }
  os << '\n';
  return os.str();
}

std::string report_to_text(const PropertyReport& report) {
  std::ostringstream os;
  os.precision(17);
  os << report.law << " on " << report.domain << ": "
     << (report.holds ? "holds_on_samples" : "FAILS") << "  (max violation "
     << report.max_violation << " over " << report.samples_evaluated << " samples)\n";
  if (report.witness) {
    os << "  witness: (";
    for (std::size_t i = 0; i < report.witness->inputs.size(); ++i)
      os << (i ? ", " : "") << report.witness->inputs[i];
    os << ")  lhs=" << report.witness->lhs << "  rhs=" << report.witness->rhs
       << "  gap=" << report.witness->gap << '\n';
  }
  return os.str();
}

std::string render_report(const PropertyReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return report_to_json(report);
    case ReportFormat::csv: return report_to_csv(report);
    case ReportFormat::text: return report_to_text(report);
  }
  throw ConfigError("unreachable report format");
}

Counterexample counterexample_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  if (j.contains("witness")) j = j.at("witness");
  if (j.is_null()) throw ConfigError("report carries no witness");
  Counterexample ce;
  ce.inputs = j.at("inputs").get<std::vector<double>>();
  ce.lhs = j.at("lhs").get<double>();
  ce.rhs = j.at("rhs").get<double>();
  ce.gap = j.at("gap").get<double>();
  return ce;
}

PropertyReport report_from_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  PropertyReport r;
  r.law = j.at("law").get<std::string>();
  r.domain = j.at("domain").get<std::string>();
  const json& p = j.at("plan");
  r.plan.grid_resolution = p.at("grid_resolution").get<int>();
  r.plan.random_count = p.at("random_count").get<long long>();
  r.plan.seed = p.at("seed").get<std::uint64_t>();
  r.plan.corner_set = p.at("corner_set").get<std::vector<double>>();
  r.plan.tolerance_value = p.at("tolerance_value").get<double>();
  r.plan.tolerance_generator = p.at("tolerance_generator").get<double>();
  r.holds = j.at("verdict").get<std::string>() == "holds_on_samples";
  r.max_violation = j.at("max_violation").get<double>();
  if (!j.at("witness").is_null()) {
    Counterexample ce;
    const json& w = j.at("witness");
    ce.inputs = w.at("inputs").get<std::vector<double>>();
    ce.lhs = w.at("lhs").get<double>();
    ce.rhs = w.at("rhs").get<double>();
    ce.gap = w.at("gap").get<double>();
    r.witness = ce;
  }
  r.samples_evaluated = j.at("samples_evaluated").get<long long>();
  return r;
}

void write_report(const PropertyReport& report, ReportFormat format, std::ostream& os) {
  os << render_report(report, format);
  if (format == ReportFormat::json) os << '\n';
}

}  // namespace bsa
