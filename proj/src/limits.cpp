#include "normlab/limits.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace normlab::limits {
namespace {

std::atomic<std::uint64_t> g_enumeration{kDefaultEnumerationBound};
std::atomic<std::uint64_t> g_subgroup_scan{kDefaultSubgroupScanBound};
std::atomic<std::uint64_t> g_quotient_degree{kDefaultQuotientDegreeBound};
std::atomic<std::uint64_t> g_node_budget{kDefaultSearchNodeBudget};

}  // namespace

std::uint64_t enumeration_bound() { return g_enumeration.load(); }
void set_enumeration_bound(std::uint64_t bound) { g_enumeration.store(bound); }

std::uint64_t subgroup_scan_bound() { return g_subgroup_scan.load(); }
void set_subgroup_scan_bound(std::uint64_t bound) { g_subgroup_scan.store(bound); }

std::uint64_t quotient_degree_bound() { return g_quotient_degree.load(); }
void set_quotient_degree_bound(std::uint64_t bound) { g_quotient_degree.store(bound); }

std::uint64_t search_node_budget() { return g_node_budget.load(); }
void set_search_node_budget(std::uint64_t budget) { g_node_budget.store(budget); }

bool load_from_environment() {
  const char* raw = std::getenv("NORMLAB_ENUM_BOUND");
  if (raw == nullptr) return true;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size() || value == 0) return false;
    set_enumeration_bound(value);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void reset_defaults() {
  set_enumeration_bound(kDefaultEnumerationBound);
  set_subgroup_scan_bound(kDefaultSubgroupScanBound);
  set_quotient_degree_bound(kDefaultQuotientDegreeBound);
  set_search_node_budget(kDefaultSearchNodeBudget);
}

}  // namespace normlab::limits
