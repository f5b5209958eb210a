#ifndef BSA_REPORT_IO_HPP
#define BSA_REPORT_IO_HPP

#include <iosfwd>
#include <string>

#include "bsa/audit.hpp"

namespace bsa {

inline constexpr const char* kEngineVersion = "1.0.0";

enum class ReportFormat { json, csv, text };

ReportFormat parse_format(const std::string& name);  // ConfigError on unknown

/// Schema: {law, domain, plan{...}, verdict, max_violation,
/// witness{inputs, lhs, rhs, gap} | null, samples_evaluated, engine_version}.
std::string report_to_json(const PropertyReport& report);

std::string report_to_csv(const PropertyReport& report);
std::string report_to_text(const PropertyReport& report);
std::string render_report(const PropertyReport& report, ReportFormat format);

/// Inverse of the witness part of report_to_json; used for the round-trip
/// self-check (re-evaluate the stored inputs, confirm the stored gap).
Counterexample counterexample_from_json(const std::string& json_text);

PropertyReport report_from_json(const std::string& json_text);

void write_report(const PropertyReport& report, ReportFormat format, std::ostream& os);

}  // namespace bsa

#endif
