#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "normlab/theorem_lab.hpp"

namespace normlab {

// What the CLI writes. Field names are frozen in docs/SCHEMA.md.
struct ReportDocument {
  std::string tool_version;
  std::vector<std::string> invocation;
  std::vector<VerdictReport> reports;
  std::map<std::string, std::uint64_t> summary;  // per status, plus "total"
  std::map<std::string, std::uint64_t> stats;    // scan counters
  std::map<std::string, std::string> analysis;   // analyze output
  double elapsed_ms = 0;
};

// Tally of the report list, one key per status plus "total".
std::map<std::string, std::uint64_t> tally(const std::vector<VerdictReport>& reports);

std::string to_json(const VerdictReport& report, int indent = -1);
VerdictReport report_from_json(std::string_view text);

std::string to_json(const ReportDocument& doc, int indent = 2);
ReportDocument document_from_json(std::string_view text);  // throws ParseError

std::string to_human(const VerdictReport& report);
std::string to_human(const ReportDocument& doc);
// One line per report, as streamed during a scan.
std::string one_line(const VerdictReport& report);

const char* tool_version();

}  // namespace normlab
