#pragma once

#include <cstdint>

namespace normlab::limits {

// Process-wide bounds. Reads and writes are atomic so scan workers may
// consult them concurrently; changing them mid-scan is not supported.

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;
inline constexpr std::uint64_t kDefaultSubgroupScanBound = 2000;
inline constexpr std::uint64_t kDefaultQuotientDegreeBound = 100'000;
inline constexpr std::uint64_t kDefaultSearchNodeBudget = 50'000'000;

std::uint64_t enumeration_bound();
void set_enumeration_bound(std::uint64_t bound);

std::uint64_t subgroup_scan_bound();
void set_subgroup_scan_bound(std::uint64_t bound);

std::uint64_t quotient_degree_bound();
void set_quotient_degree_bound(std::uint64_t bound);

std::uint64_t search_node_budget();
void set_search_node_budget(std::uint64_t budget);

// Applies NORMLAB_ENUM_BOUND when set. Returns false if the variable is
// present but not a positive integer.
bool load_from_environment();

void reset_defaults();

}  // namespace normlab::limits
