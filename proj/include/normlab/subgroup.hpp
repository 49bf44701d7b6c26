#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "normlab/element_index.hpp"
#include "normlab/group.hpp"

namespace normlab {

// A group together with the ambient group it lives in.
class Subgroup {
 public:
  // Verifies that every carrier generator lies in the ambient group.
  Subgroup(Group ambient, Group carrier);

  static Subgroup whole(const Group& ambient);
  static Subgroup trivial(const Group& ambient);
  static Subgroup generated(const Group& ambient, std::vector<Perm> generators);
  // Skips the containment check; the caller guarantees it.
  static Subgroup trusted(Group ambient, Group carrier);

  const Group& ambient() const { return ambient_; }
  const Group& group() const { return carrier_; }
  std::uint64_t order() const { return carrier_.order(); }
  bool contains(const Perm& p) const { return carrier_.contains(p); }
  const std::vector<Perm>& generators() const { return carrier_.generators(); }
  bool is_trivial() const { return carrier_.is_trivial(); }

  // Equal carriers (ambients are not compared).
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.carrier_ == b.carrier_; }

 private:
  Subgroup(Group ambient, Group carrier, bool);
  Group ambient_;
  Group carrier_;
};

enum class NormalizerMethod { Backtrack, Exhaustive };

Subgroup join(const Group& ambient, const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Group& ambient, const Subgroup& a, const Subgroup& b);
Subgroup normal_closure(const Group& ambient, const Subgroup& a);
Subgroup core(const Group& ambient, const Subgroup& h);
Subgroup centralizer(const Group& ambient, const Subgroup& a);
Subgroup center(const Group& g);
Subgroup normalizer(const Group& ambient, const Subgroup& h, NormalizerMethod method = NormalizerMethod::Backtrack);
bool is_normal(const Group& ambient, const Subgroup& h);

// True iff N_ambient(l) equals h. Cheaper than computing the normalizer: the
// search stops at the first normalizing element outside h.
bool normalizer_equals(const Group& ambient, const Subgroup& l, const Subgroup& h);

// Group-level helpers.
Group conjugate_group(const Group& h, const Perm& g);
Group intersect_groups(const Group& a, const Group& b);
bool normalizes(const Perm& g, const Group& h);
bool is_abelian(const Group& g);

// All subgroups of an enumerable group, as element sets over a shared
// ElementIndex. Entries are sorted by order, ties in discovery order.
struct SubgroupLattice {
  struct Entry {
    Bitset members;
    std::vector<std::uint32_t> generators;
    std::uint64_t order = 0;
  };

  std::shared_ptr<const ElementIndex> index;
  std::vector<Entry> entries;

  std::size_t size() const { return entries.size(); }
  Subgroup subgroup(std::size_t i) const;
};

SubgroupLattice subgroup_lattice(const Group& g);
std::vector<Subgroup> enumerate_subgroups(const Group& g);

struct ConjugacyClass {
  Perm representative;
  std::uint64_t size = 0;
};
std::vector<ConjugacyClass> conjugacy_classes(const Group& g);

std::vector<Subgroup> minimal_normal_subgroups(const Group& g);
bool is_simple(const Group& g);

// Stable identifier of a subgroup as a set: order plus a hash over its sorted
// elements (or over its sorted generators when not enumerable).
std::string fingerprint(const Group& h);
std::vector<std::string> generator_strings(const Group& h);

}  // namespace normlab
