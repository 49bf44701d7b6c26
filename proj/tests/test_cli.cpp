// Runs the installed-layout binary and checks exit codes and output.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "normlab/report.hpp"

#ifndef NORMLAB_CLI
#error "NORMLAB_CLI must point at the normlab binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + NORMLAB_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Report list with timings zeroed, for comparisons across runs.
std::string stable(const normlab::ReportDocument& doc) {
  std::string out;
  for (normlab::VerdictReport r : doc.reports) {
    r.elapsed_ms = 0;
    out += normlab::to_json(r) + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("analyze") {
  const Run s4 = run("analyze S:4");
  CHECK(s4.code == 0);
  CHECK(s4.out.find("fitting_length            3") != std::string::npos);
  CHECK(s4.out.find("fitting_order             4") != std::string::npos);
  const Run psl = run("analyze --group PSL2:17 --format json");
  CHECK(psl.code == 0);
  const auto doc = normlab::document_from_json(psl.out);
  CHECK(doc.analysis.at("order") == "2448");
  CHECK(doc.analysis.at("solvable") == "no");
  CHECK(doc.analysis.at("simple") == "yes");
  CHECK(run("analyze C:1").code == 0);
}

TEST_CASE("verify") {
  const Run a = run("verify comp22 --group S:4 --subgroup stab:4");
  CHECK(a.code == 0);
  CHECK(a.out.find("comp22 (fit-normal): confirmed") != std::string::npos);
  const Run b = run("verify comp22 --group PSL2:17 --subgroup syl:2 --format json");
  CHECK(b.code == 0);
  CHECK(normlab::document_from_json(b.out).reports.at(0).status == normlab::Status::HypothesesNotMet);
  const Run c = run("verify rem23 --group PSL2:17 --subgroup syl:2 --mode def21=h-normal --format json");
  CHECK(c.code == 0);
  const auto rc = normlab::document_from_json(c.out).reports.at(0);
  CHECK(rc.status == normlab::Status::Confirmed);
  CHECK(rc.mode == normlab::Def21Mode::HNormal);
  CHECK(rc.notes.at("branch") == "sylow-2");
  CHECK(run("verify burnside --group AGL1:7 --subgroup stab:1").code == 0);
  CHECK(run("verify thompson --group AGL1:7 --subgroup syl:3 --kernel syl:7").code == 0);
}

TEST_CASE("human and JSON verdicts agree") {
  const Run human = run("verify hall --group S:4 --subgroup syl:2 --mode both");
  const Run json = run("verify hall --group S:4 --subgroup syl:2 --mode both --format json");
  REQUIRE(human.code == json.code);
  const auto doc = normlab::document_from_json(json.out);
  REQUIRE(doc.reports.size() == 2);
  for (const auto& r : doc.reports) {
    const std::string head = r.theorem + " (" + normlab::to_string(*r.mode) + "): " + normlab::to_string(r.status);
    CHECK(human.out.find(head) != std::string::npos);
  }
}

TEST_CASE("exit code 2 on usage and parse errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("analyze Q:3").code == 2);
  CHECK(run("analyze PSL2:9").code == 2);
  CHECK(run("verify nope --group S:4 --subgroup stab:4").code == 2);
  CHECK(run("verify comp22 --group S:4").code == 2);
  CHECK(run("verify comp22 --group S:4 --subgroup stab:9").code == 2);
  CHECK(run("verify comp22 --group S:4 --subgroup stab:4 --mode def21=wrong").code == 2);
  CHECK(run("scan --group S:4 --theorems comp22,nope").code == 2);
  CHECK(run("scan --group S:4 --format xml").code == 2);
  CHECK(run("analyze S:4", "NORMLAB_ENUM_BOUND=abc").code == 2);
}

TEST_CASE("exit code 4 when everything is skipped") {
  // S8 is beyond the subgroup-scan bound that the Frobenius search needs.
  CHECK(run("verify burnside --group S:8 --subgroup syl:2").code == 4);
  CHECK(run("verify comp22 --group S:4 --subgroup syl:2").code == 0);
}

TEST_CASE("exit code 3 on a counterexample") {
  // No shipped verifier produces a counterexample on the catalog, so the
  // path is exercised through a saved report that contains one.
  normlab::ReportDocument doc;
  doc.tool_version = normlab::tool_version();
  normlab::VerdictReport r;
  r.theorem = "comp22";
  r.hypothesis_checks.push_back({"h", true, "", ""});
  r.conclusion_checks.push_back({"c", false, "(1 2)", ""});
  r.finalize();
  REQUIRE(r.status == normlab::Status::Counterexample);
  doc.reports.push_back(r);
  doc.summary = normlab::tally(doc.reports);
  const std::string path = "normlab_cli_counterexample.json";
  std::ofstream(path) << normlab::to_json(doc);
  const Run bad = run("report " + path);
  CHECK(bad.code == 3);
  CHECK(bad.out.find("comp22: counterexample") != std::string::npos);

  doc.reports.front().status = normlab::Status::SkippedTooLarge;
  doc.reports.front().conclusion_checks.clear();
  std::ofstream(path) << normlab::to_json(doc);
  CHECK(run("report " + path).code == 4);
  doc.reports.clear();
  std::ofstream(path) << normlab::to_json(doc);
  CHECK(run("report " + path).code == 0);
  std::ofstream(path) << "{ not json";
  CHECK(run("report " + path).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("enumeration bound flag and environment") {
  CHECK(run("--enum-bound 50 analyze S:4").code == 0);
  CHECK(run("analyze S:4", "NORMLAB_ENUM_BOUND=500").code == 0);
  const Run tight = run("analyze A:5 --format json", "NORMLAB_ENUM_BOUND=10");
  CHECK(tight.code == 0);
  CHECK(normlab::document_from_json(tight.out).analysis.at("minimal_normal_orders").rfind("skipped", 0) == 0);
}

TEST_CASE("scan") {
  const Run empty = run("scan --max-order 1 --format json");
  CHECK(empty.code == 0);
  const auto doc = normlab::document_from_json(empty.out);
  CHECK(doc.reports.empty());
  CHECK(doc.summary.at("total") == 0);

  const std::string out1 = "normlab_cli_scan1.json";
  const std::string out2 = "normlab_cli_scan2.json";
  const Run a = run("scan --group S:4 --theorems comp22,hall --jobs 1 --format json --out " + out1);
  const Run b = run("scan --group S:4 --group D:6 --group A:4 --theorems comp22,hall --jobs 3 --format json --out " + out2);
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  // One log line per report plus the summary and stats lines.
  const auto da = normlab::document_from_json(slurp(out1));
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == static_cast<long>(da.reports.size()) + 2);
  CHECK(da.summary == normlab::tally(da.reports));
  CHECK(da.summary.at("counterexample") == 0);

  const Run c = run("scan --group S:4 --group D:6 --group A:4 --theorems comp22,hall --jobs 1 --format json --out " + out1);
  CHECK(c.code == 0);
  CHECK(stable(normlab::document_from_json(slurp(out1))) == stable(normlab::document_from_json(slurp(out2))));
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}
