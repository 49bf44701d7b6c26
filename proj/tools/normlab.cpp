// normlab command line: analyze a group, verify one theorem on a pair, scan a
// catalog, or re-render a saved report.
//
// Exit codes: 0 ok, 2 usage or parse error, 3 counterexample found,
// 4 every report was skipped as too large.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "normlab/catalog.hpp"
#include "normlab/commands.hpp"
#include "normlab/error.hpp"
#include "normlab/limits.hpp"
#include "normlab/report.hpp"
#include "normlab/scan.hpp"

namespace {

using namespace normlab;

struct Options {
  std::vector<std::string> groups;
  std::string subgroup;
  std::string kernel;
  std::string theorem;
  std::string theorems;
  std::string mode;
  std::string format = "human";
  std::string out;
  std::string sweep;
  std::uint64_t max_order = 2500;
  std::uint64_t enum_bound = 0;
  unsigned jobs = 1;
};

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

std::string render(const ReportDocument& doc, const Options& opt) {
  return opt.format == "json" ? to_json(doc) + "\n" : to_human(doc);
}

void write_out(const ReportDocument& doc, const Options& opt) {
  std::ofstream file(opt.out);
  if (!file) throw Error(ErrorKind::InvalidParameter, "cannot write '" + opt.out + "'");
  file << render(doc, opt);
}

int cmd_analyze(const Options& opt, ReportDocument& doc) {
  if (opt.groups.size() != 1) throw Error(ErrorKind::InvalidParameter, "analyze needs exactly one --group");
  const BuiltGroup built = build(parse_spec(opt.groups.front()), parse_selector(opt.subgroup));
  doc.analysis = analyze_group(built);
  return kExitOk;
}

int cmd_verify(const Options& opt, ReportDocument& doc) {
  if (opt.groups.size() != 1) throw Error(ErrorKind::InvalidParameter, "verify needs exactly one --group");
  doc.reports = verify_by_name(VerifyRequest{opt.theorem, opt.groups.front(), opt.subgroup, opt.kernel,
                                             parse_modes(opt.mode, false)});
  doc.summary = tally(doc.reports);
  return exit_code_for(doc.reports);
}

int cmd_report(const std::string& path, ReportDocument& doc) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidParameter, "cannot read '" + path + "'");
  std::stringstream text;
  text << in.rdbuf();
  doc = document_from_json(text.str());
  return exit_code_for(doc.reports);
}

int cmd_scan(const Options& opt, ReportDocument& doc) {
  const std::vector<GroupSpec> specs = resolve_scan_specs(opt.groups, opt.sweep);
  if (opt.max_order > limits::subgroup_scan_bound()) limits::set_subgroup_scan_bound(opt.max_order);

  ScanOptions options;
  options.max_order = opt.max_order;
  options.theorems = parse_theorem_list(opt.theorems);
  options.modes = parse_modes(opt.mode, true);
  options.jobs = std::max(1u, opt.jobs);
  // With --format json and no --out, stdout carries only the document.
  if (opt.format != "json" || !opt.out.empty()) {
    options.on_report = [](const VerdictReport& r) { std::cout << one_line(r) << "\n"; };
  }
  ScanResult result = scan(specs, options);
  doc.reports = std::move(result.reports);
  doc.stats = std::move(result.stats);
  doc.summary = tally(doc.reports);
  return exit_code_for(doc.reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite permutation group toolkit and theorem checker"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("--out", opt.out, "Write the report document to this file");
  };

  app.add_option("--enum-bound", opt.enum_bound, "Element enumeration bound (also NORMLAB_ENUM_BOUND)");
  app.fallthrough();

  CLI::App* analyze = app.add_subcommand("analyze", "Structural invariants of one group");
  analyze->add_option("spec", opt.groups, "Group spec, e.g. S:4, PSL2:17, FILE:path");
  analyze->add_option("--group", opt.groups, "Same as the positional spec");
  analyze->add_option("--subgroup", opt.subgroup, "Subgroup selector: syl:p, stab:k, gens:(..);(..)");
  add_common(analyze);

  CLI::App* verify = app.add_subcommand("verify", "Check one theorem on a group and subgroup");
  verify->add_option("theorem", opt.theorem, "comp22, hall, rem23, simp, thompson or burnside")->required();
  verify->add_option("--group", opt.groups, "Group spec")->required();
  verify->add_option("--subgroup", opt.subgroup, "Subgroup selector (H, or Phi for thompson)");
  verify->add_option("--kernel", opt.kernel, "Kernel selector for thompson and burnside");
  verify->add_option("--mode", opt.mode, "def21=fit-normal, def21=h-normal or both");
  add_common(verify);

  CLI::App* scan_cmd = app.add_subcommand("scan", "Run the verifiers over a catalog");
  scan_cmd->add_option("--group", opt.groups, "Group spec (repeatable)");
  scan_cmd->add_option("--sweep", opt.sweep, "Built-in sweep name: default");
  scan_cmd->add_option("--max-order", opt.max_order, "Skip groups above this order");
  scan_cmd->add_option("--theorems", opt.theorems, "Comma separated subset of comp22,hall,rem23,simp,thompson,burnside,intro");
  scan_cmd->add_option("--mode", opt.mode, "def21=fit-normal, def21=h-normal or both (default both)");
  scan_cmd->add_option("--jobs", opt.jobs, "Worker threads");
  add_common(scan_cmd);

  std::string report_path;
  CLI::App* report = app.add_subcommand("report", "Re-render a saved JSON report; exit code follows its verdicts");
  report->add_option("file", report_path, "Report document written by --format json")->required();
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ReportDocument doc;
  doc.tool_version = tool_version();
  for (int i = 0; i < argc; ++i) doc.invocation.emplace_back(argv[i]);
  const auto start = std::chrono::steady_clock::now();

  try {
    if (!limits::load_from_environment()) {
      std::cerr << "error: NORMLAB_ENUM_BOUND must be a positive integer\n";
      return kExitUsage;
    }
    if (opt.enum_bound > 0) limits::set_enumeration_bound(opt.enum_bound);

    int code = kExitOk;
    const bool is_scan = scan_cmd->parsed();
    if (analyze->parsed()) code = cmd_analyze(opt, doc);
    if (verify->parsed()) code = cmd_verify(opt, doc);
    if (is_scan) code = cmd_scan(opt, doc);
    if (report->parsed()) {
      code = cmd_report(report_path, doc);
    } else {
      doc.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    if (!opt.out.empty()) write_out(doc, opt);
    if (is_scan && (opt.format != "json" || !opt.out.empty())) {
      std::cout << "summary:";
      for (const auto& [k, v] : doc.summary) std::cout << " " << k << "=" << v;
      std::cout << "\nstats:";
      for (const auto& [k, v] : doc.stats) std::cout << " " << k << "=" << v;
      std::cout << "\n";
    } else if (opt.out.empty()) {
      std::cout << render(doc, opt);
    }
    if (code == kExitCounterexample) std::cerr << "COUNTEREXAMPLE: a verified statement failed, see the report\n";
    return code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Internal ? 1 : kExitUsage;
  }
}
