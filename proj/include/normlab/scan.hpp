#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "normlab/catalog.hpp"
#include "normlab/theorem_lab.hpp"

namespace normlab {

// comp22 hall rem23 simp thompson burnside intro
const std::vector<std::string>& theorem_names();

struct ScanOptions {
  std::uint64_t max_order = 2500;
  std::set<std::string> theorems;  // empty means all
  std::vector<Def21Mode> modes{Def21Mode::FitNormal, Def21Mode::HNormal};
  unsigned jobs = 1;
  // Called from the collector thread, in final report order.
  std::function<void(const VerdictReport&)> on_report;
};

struct ScanResult {
  std::vector<VerdictReport> reports;
  // groups, groups_over_max_order, pairs, hits_fit_normal, hits_h_normal,
  // distinct_hits, frobenius_groups, consequence_failures
  std::map<std::string, std::uint64_t> stats;
};

// Groups above max_order are dropped; every other problem becomes a
// skipped-too-large report for the affected item. Output order depends only
// on the inputs: spec order, then subgroup fingerprint, theorem, mode.
ScanResult scan(const std::vector<GroupSpec>& specs, const ScanOptions& options);

}  // namespace normlab
