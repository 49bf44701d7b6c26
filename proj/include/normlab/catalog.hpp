#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normlab/subgroup.hpp"

namespace normlab {

enum class SpecKind { S, A, C, D, PSL2, AGL1, PROD, FILE };

// Textual forms: S:n A:n C:n D:n PSL2:q AGL1:p FILE:path, and direct
// products such as S:3xC:2 acting on disjoint point blocks.
struct GroupSpec {
  SpecKind kind = SpecKind::C;
  std::uint64_t parameter = 1;
  std::string path;                // FILE only
  std::vector<GroupSpec> factors;  // PROD only

  std::string label() const;
};

// syl:p, stab:k, or gens:(1 2)(3 4);(1 3) with ';' between generators.
struct Selector {
  enum class Kind { None, Sylow, Stabilizer, Generators };
  Kind kind = Kind::None;
  std::uint64_t value = 0;
  std::vector<std::string> generators;

  std::string label() const;
};

GroupSpec parse_spec(std::string_view text);
Selector parse_selector(std::string_view text);

struct BuiltGroup {
  Group group;
  std::optional<Subgroup> subgroup;
  std::string label;
};

// Group files: `degree <n>` first, then `gen <cycles>` / `sgen <cycles>`
// lines; blank lines and lines starting with '#' are skipped.
BuiltGroup parse_group_file(std::string_view text);

BuiltGroup build(const GroupSpec& spec);
// Applies the selector to the built group; a FILE subgroup is kept when the
// selector is empty.
BuiltGroup build(const GroupSpec& spec, const Selector& selector);
Subgroup select(const Group& g, const Selector& selector);

// Families bounded so every order is at most 2500.
std::vector<GroupSpec> default_sweep();

}  // namespace normlab
