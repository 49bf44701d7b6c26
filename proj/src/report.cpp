#include "normlab/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "normlab/error.hpp"

#ifndef NORMLAB_VERSION
#define NORMLAB_VERSION "0.0.0"
#endif

namespace normlab {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

ordered check_json(const Check& c) {
  ordered j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["witness"] = c.witness;
  j["detail"] = c.detail;
  return j;
}

Check check_from(const json& j) {
  return Check{j.at("name").get<std::string>(), j.at("passed").get<bool>(), j.value("witness", ""), j.value("detail", "")};
}

ordered report_json(const VerdictReport& r) {
  ordered j;
  j["theorem"] = r.theorem;
  j["status"] = to_string(r.status);
  j["mode"] = r.mode ? ordered(to_string(*r.mode)) : ordered(nullptr);
  ordered subject = ordered::array();
  for (const SubjectGroup& s : r.subject) {
    ordered g;
    g["role"] = s.role;
    g["label"] = s.label;
    g["order"] = s.order;
    g["fingerprint"] = s.fingerprint;
    g["generators"] = s.generators;
    subject.push_back(std::move(g));
  }
  j["subject"] = std::move(subject);
  for (auto [key, list] : {std::pair{"hypothesis_checks", &r.hypothesis_checks},
                           std::pair{"conclusion_checks", &r.conclusion_checks},
                           std::pair{"consequence_checks", &r.consequence_checks}}) {
    ordered arr = ordered::array();
    for (const Check& c : *list) arr.push_back(check_json(c));
    j[key] = std::move(arr);
  }
  j["notes"] = r.notes;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

VerdictReport report_from(const json& j) {
  VerdictReport r;
  r.theorem = j.at("theorem").get<std::string>();
  const auto status = status_from_string(j.at("status").get<std::string>());
  if (!status) throw Error(ErrorKind::ParseError, "unknown status " + j.at("status").dump());
  r.status = *status;
  if (j.contains("mode") && !j.at("mode").is_null()) {
    const auto mode = mode_from_string(j.at("mode").get<std::string>());
    if (!mode) throw Error(ErrorKind::ParseError, "unknown mode " + j.at("mode").dump());
    r.mode = *mode;
  }
  for (const json& s : j.at("subject")) {
    r.subject.push_back(SubjectGroup{s.at("role").get<std::string>(), s.at("label").get<std::string>(),
                                     s.at("order").get<std::uint64_t>(), s.at("fingerprint").get<std::string>(),
                                     s.at("generators").get<std::vector<std::string>>()});
  }
  for (const json& c : j.at("hypothesis_checks")) r.hypothesis_checks.push_back(check_from(c));
  for (const json& c : j.at("conclusion_checks")) r.conclusion_checks.push_back(check_from(c));
  for (const json& c : j.value("consequence_checks", json::array())) r.consequence_checks.push_back(check_from(c));
  r.notes = j.value("notes", std::map<std::string, std::string>{});
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  return r;
}

template <typename F>
auto parse_guard(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace

const char* tool_version() { return NORMLAB_VERSION; }

std::map<std::string, std::uint64_t> tally(const std::vector<VerdictReport>& reports) {
  std::map<std::string, std::uint64_t> out;
  for (Status s : {Status::Confirmed, Status::HypothesesNotMet, Status::Counterexample, Status::SkippedTooLarge}) {
    out[to_string(s)] = 0;
  }
  for (const VerdictReport& r : reports) ++out[to_string(r.status)];
  out["total"] = reports.size();
  return out;
}

std::string to_json(const VerdictReport& report, int indent) { return report_json(report).dump(indent); }

VerdictReport report_from_json(std::string_view text) {
  return parse_guard([&] { return report_from(json::parse(text)); });
}

std::string to_json(const ReportDocument& doc, int indent) {
  ordered j;
  j["tool_version"] = doc.tool_version;
  j["invocation"] = doc.invocation;
  ordered reports = ordered::array();
  for (const VerdictReport& r : doc.reports) reports.push_back(report_json(r));
  j["reports"] = std::move(reports);
  j["summary"] = doc.summary;
  j["stats"] = doc.stats;
  j["analysis"] = doc.analysis;
  j["elapsed_ms"] = doc.elapsed_ms;
  return j.dump(indent);
}

ReportDocument document_from_json(std::string_view text) {
  return parse_guard([&] {
    const json j = json::parse(text);
    ReportDocument doc;
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.invocation = j.at("invocation").get<std::vector<std::string>>();
    for (const json& r : j.at("reports")) doc.reports.push_back(report_from(r));
    doc.summary = j.at("summary").get<std::map<std::string, std::uint64_t>>();
    doc.stats = j.value("stats", std::map<std::string, std::uint64_t>{});
    doc.analysis = j.value("analysis", std::map<std::string, std::string>{});
    doc.elapsed_ms = j.value("elapsed_ms", 0.0);
    return doc;
  });
}

std::string one_line(const VerdictReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(19) << to_string(r.status) << ' ' << std::setw(21) << r.theorem;
  out << ' ' << std::setw(10) << (r.mode ? to_string(*r.mode) : "-");
  for (const SubjectGroup& s : r.subject) out << ' ' << s.role << '=' << s.label << "[" << s.order << "]";
  return out.str();
}

std::string to_human(const VerdictReport& r) {
  std::ostringstream out;
  out << r.theorem;
  if (r.mode) out << " (" << to_string(*r.mode) << ")";
  out << ": " << to_string(r.status) << "\n";
  for (const SubjectGroup& s : r.subject) {
    out << "  " << s.role << " = " << s.label << ", order " << s.order << ", " << s.fingerprint << "\n";
  }
  auto section = [&](const char* title, const std::vector<Check>& checks) {
    if (checks.empty()) return;
    out << "  " << title << ":\n";
    for (const Check& c : checks) {
      out << "    [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) out << " -- " << c.detail;
      out << "\n";
      if (!c.passed) out << "           witness: " << c.witness << "\n";
    }
  };
  section("hypotheses", r.hypothesis_checks);
  section("conclusions", r.conclusion_checks);
  section("consequences", r.consequence_checks);
  for (const auto& [k, v] : r.notes) out << "  " << k << ": " << v << "\n";
  out << "  elapsed: " << std::fixed << std::setprecision(2) << r.elapsed_ms << " ms\n";
  return out.str();
}

std::string to_human(const ReportDocument& doc) {
  std::ostringstream out;
  out << "normlab " << doc.tool_version << "\n";
  for (const auto& [k, v] : doc.analysis) out << std::left << std::setw(26) << k << v << "\n";
  for (const VerdictReport& r : doc.reports) out << "\n" << to_human(r);
  if (!doc.summary.empty()) {
    out << "\nsummary:";
    for (const auto& [k, v] : doc.summary) out << " " << k << "=" << v;
    out << "\n";
  }
  if (!doc.stats.empty()) {
    out << "stats:";
    for (const auto& [k, v] : doc.stats) out << " " << k << "=" << v;
    out << "\n";
  }
  out << "elapsed: " << std::fixed << std::setprecision(1) << doc.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace normlab
