#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "normlab/group.hpp"

namespace normlab {

// Backtrack search for a subgroup of an ambient group described by a
// membership predicate, walking the ambient stabilizer chain level by level.
//
// node_ok receives the images of base points b_0..b_d (0-based) of the
// partial element and may reject the whole subtree. accept is evaluated on
// complete elements. Both must describe a subgroup: the set of accepted
// elements has to be closed under products.
//
// known must lie in the target subgroup. Orbits of the subgroup found so far
// are used to skip cosets already represented.
struct SearchHooks {
  std::function<bool(std::span<const Point> base_images)> node_ok;
  std::function<bool(const Perm&)> accept;
};

struct SearchOptions {
  // Return as soon as one element outside <known> has been found.
  bool stop_on_first_new = false;
};

struct SearchResult {
  Group group;
  bool found_new = false;
  std::uint64_t nodes = 0;
};

SearchResult subgroup_search(const Group& ambient, std::span<const Perm> known, const SearchHooks& hooks,
                             SearchOptions options = {});

}  // namespace normlab
