#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "normlab/catalog.hpp"
#include "normlab/theorem_lab.hpp"

namespace normlab {

// Shared by the command line and the Python module.

// "fit-normal", "h-normal", "both", optionally prefixed with "def21=".
// Empty text gives both modes or fit-normal alone.
std::vector<Def21Mode> parse_modes(std::string_view text, bool empty_means_both);

// Comma separated theorem names; "all" or empty means every theorem.
std::set<std::string> parse_theorem_list(std::string_view text);

// Structural invariants keyed by name. Values are strings; an invariant that
// hit a size bound reads "skipped: ...".
std::map<std::string, std::string> analyze_group(const BuiltGroup& built);

struct VerifyRequest {
  std::string theorem;
  std::string group;
  std::string subgroup;
  std::string kernel;  // thompson and burnside only
  std::vector<Def21Mode> modes{Def21Mode::FitNormal};
};

// One report per mode for the pair theorems, one report otherwise.
// Throws UnknownTheorem, ParseError and the catalog errors.
std::vector<VerdictReport> verify_by_name(const VerifyRequest& request);

// Parsed --group specs followed by the named sweep ("default" is the only
// one). With neither, the default sweep.
std::vector<GroupSpec> resolve_scan_specs(const std::vector<std::string>& groups, std::string_view sweep);

// 0 ok, 3 counterexample or failed consequence, 4 all skipped.
int exit_code_for(const std::vector<VerdictReport>& reports);

}  // namespace normlab
