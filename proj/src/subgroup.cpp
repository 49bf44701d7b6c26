#include "normlab/subgroup.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_map>

#include "normlab/error.hpp"
#include "normlab/limits.hpp"
#include "normlab/numtheory.hpp"
#include "normlab/search.hpp"

namespace normlab {
namespace {

void require_ambient(const Group& ambient, const Subgroup& s) {
  if (s.ambient().same_object(ambient)) return;
  if (s.ambient().degree() != ambient.degree() || !(s.ambient() == ambient)) {
    throw Error(ErrorKind::AmbientMismatch, "subgroup belongs to a different ambient group");
  }
}

// Orbit partition of a group: orbit id per point and orbit sizes.
struct OrbitPartition {
  std::vector<std::uint32_t> id;
  std::vector<std::uint32_t> size;
};

OrbitPartition orbit_partition(const Group& h) {
  const std::size_t n = h.degree();
  OrbitPartition part;
  part.id.assign(n, UINT32_MAX);
  std::vector<Point> queue;
  for (Point start = 0; start < n; ++start) {
    if (part.id[start] != UINT32_MAX) continue;
    const auto label = static_cast<std::uint32_t>(part.size.size());
    queue.assign(1, start);
    part.id[start] = label;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const Perm& g : h.generators()) {
        const Point y = g[queue[i]];
        if (part.id[y] == UINT32_MAX) {
          part.id[y] = label;
          queue.push_back(y);
        }
      }
    }
    part.size.push_back(static_cast<std::uint32_t>(queue.size()));
  }
  return part;
}

// Prune for N_G(H): a normalizing element permutes the orbits of H.
SearchHooks normalizer_hooks(const Group& ambient, const Group& h) {
  auto part = std::make_shared<OrbitPartition>(orbit_partition(h));
  auto base = std::make_shared<std::vector<Point>>(ambient.chain().base());
  SearchHooks hooks;
  hooks.node_ok = [part, base](std::span<const Point> images) {
    const std::size_t d = images.size() - 1;
    const auto& id = part->id;
    const std::uint32_t src = id[(*base)[d]];
    const std::uint32_t dst = id[images[d]];
    if (part->size[src] != part->size[dst]) return false;
    for (std::size_t j = 0; j < d; ++j) {
      if ((id[(*base)[j]] == src) != (id[images[j]] == dst)) return false;
    }
    return true;
  };
  hooks.accept = [h](const Perm& g) { return normalizes(g, h); };
  return hooks;
}

// Prune for C_G(A): the base images force the images of whole A-orbits,
// f(x^a) = f(x)^a; any clash rules the subtree out.
class CommutingMap {
 public:
  CommutingMap(std::vector<Perm> gens, std::vector<Point> base, std::size_t degree)
      : gens_(std::move(gens)), base_(std::move(base)), fwd_(degree, kUnset), bwd_(degree, kUnset) {}

  bool consistent(std::span<const Point> images) {
    for (Point x : touched_) {
      bwd_[fwd_[x]] = kUnset;
      fwd_[x] = kUnset;
    }
    touched_.clear();
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (!assign(base_[j], images[j])) return false;
    }
    for (std::size_t i = 0; i < touched_.size(); ++i) {
      const Point x = touched_[i];
      const Point fx = fwd_[x];
      for (const Perm& a : gens_) {
        if (!assign(a[x], a[fx])) return false;
      }
    }
    return true;
  }

 private:
  static constexpr Point kUnset = UINT32_MAX;

  bool assign(Point x, Point y) {
    if (fwd_[x] == kUnset && bwd_[y] == kUnset) {
      fwd_[x] = y;
      bwd_[y] = x;
      touched_.push_back(x);
      return true;
    }
    return fwd_[x] == y;
  }

  std::vector<Perm> gens_;
  std::vector<Point> base_;
  std::vector<Point> fwd_;
  std::vector<Point> bwd_;
  std::vector<Point> touched_;
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

Subgroup::Subgroup(Group ambient, Group carrier, bool) : ambient_(std::move(ambient)), carrier_(std::move(carrier)) {}

Subgroup::Subgroup(Group ambient, Group carrier) : Subgroup(std::move(ambient), std::move(carrier), true) {
  if (carrier_.degree() != ambient_.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "subgroup degree differs from ambient degree");
  }
  if (!carrier_.is_subgroup_of(ambient_)) {
    throw Error(ErrorKind::NotASubgroup, "carrier generator outside the ambient group");
  }
}

Subgroup Subgroup::whole(const Group& ambient) { return Subgroup(ambient, ambient, true); }

Subgroup Subgroup::trivial(const Group& ambient) {
  return Subgroup(ambient, Group::trivial(ambient.degree()), true);
}

Subgroup Subgroup::generated(const Group& ambient, std::vector<Perm> generators) {
  return Subgroup(ambient, Group::from_generators(ambient.degree(), std::move(generators)));
}

Subgroup Subgroup::trusted(Group ambient, Group carrier) {
  return Subgroup(std::move(ambient), std::move(carrier), true);
}

Group conjugate_group(const Group& h, const Perm& g) {
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const Perm& x : h.generators()) gens.push_back(conjugate(x, g));
  return Group::from_generators(h.degree(), std::move(gens));
}

bool normalizes(const Perm& g, const Group& h) {
  for (const Perm& x : h.generators()) {
    if (!h.contains(conjugate(x, g))) return false;
  }
  return true;
}

bool is_abelian(const Group& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

Group intersect_groups(const Group& a, const Group& b) {
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& large = a.order() <= b.order() ? b : a;
  if (small.is_subgroup_of(large)) return small;
  if (small.order() > limits::enumeration_bound()) {
    throw Error(ErrorKind::OrderTooLarge, "both intersection factors exceed the enumeration bound");
  }
  GroupBuilder builder(a.degree());
  small.for_each_element([&](const Perm& x) {
    if (!builder.contains(x) && large.contains(x)) builder.add(x);
    return true;
  });
  return std::move(builder).build();
}

Subgroup join(const Group& ambient, const Subgroup& a, const Subgroup& b) {
  require_ambient(ambient, a);
  require_ambient(ambient, b);
  GroupBuilder builder(ambient.degree());
  for (const Perm& g : a.generators()) builder.add(g);
  for (const Perm& g : b.generators()) builder.add(g);
  return Subgroup::trusted(ambient, std::move(builder).build());
}

Subgroup intersection(const Group& ambient, const Subgroup& a, const Subgroup& b) {
  require_ambient(ambient, a);
  require_ambient(ambient, b);
  return Subgroup::trusted(ambient, intersect_groups(a.group(), b.group()));
}

Subgroup normal_closure(const Group& ambient, const Subgroup& a) {
  require_ambient(ambient, a);
  GroupBuilder builder(ambient.degree());
  std::vector<Perm> gens;
  for (const Perm& x : a.generators()) {
    if (builder.add(x)) gens.push_back(x);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Perm& g : ambient.generators()) {
      Perm c = conjugate(gens[i], g);
      if (builder.add(c)) gens.push_back(std::move(c));
    }
  }
  return Subgroup::trusted(ambient, std::move(builder).build());
}

Subgroup core(const Group& ambient, const Subgroup& h) {
  require_ambient(ambient, h);
  Group c = h.group();
  bool stable = false;
  while (!stable) {
    stable = true;
    for (const Perm& g : ambient.generators()) {
      if (c.is_trivial()) return Subgroup::trusted(ambient, c);
      if (normalizes(g, c)) continue;
      c = intersect_groups(c, conjugate_group(c, g));
      stable = false;
    }
  }
  return Subgroup::trusted(ambient, c);
}

Subgroup centralizer(const Group& ambient, const Subgroup& a) {
  require_ambient(ambient, a);
  if (a.is_trivial()) return Subgroup::whole(ambient);
  auto map = std::make_shared<CommutingMap>(a.generators(), ambient.chain().base(), ambient.degree());
  SearchHooks hooks;
  hooks.node_ok = [map](std::span<const Point> images) { return map->consistent(images); };
  const std::vector<Perm> gens = a.generators();
  hooks.accept = [gens](const Perm& g) {
    for (const Perm& x : gens) {
      if (x * g != g * x) return false;
    }
    return true;
  };
  auto result = subgroup_search(ambient, {}, hooks);
  return Subgroup::trusted(ambient, std::move(result.group));
}

Subgroup center(const Group& g) { return centralizer(g, Subgroup::whole(g)); }

Subgroup normalizer(const Group& ambient, const Subgroup& h, NormalizerMethod method) {
  require_ambient(ambient, h);
  if (method == NormalizerMethod::Exhaustive) {
    GroupBuilder builder(ambient.degree());
    for (const Perm& x : h.generators()) builder.add(x);
    ambient.for_each_element([&](const Perm& g) {
      if (!builder.contains(g) && normalizes(g, h.group())) builder.add(g);
      return true;
    });
    return Subgroup::trusted(ambient, std::move(builder).build());
  }
  try {
    auto result = subgroup_search(ambient, h.generators(), normalizer_hooks(ambient, h.group()));
    return Subgroup::trusted(ambient, std::move(result.group));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OrderTooLarge || ambient.order() > limits::enumeration_bound()) throw;
    return normalizer(ambient, h, NormalizerMethod::Exhaustive);
  }
}

bool normalizer_equals(const Group& ambient, const Subgroup& l, const Subgroup& h) {
  require_ambient(ambient, l);
  require_ambient(ambient, h);
  for (const Perm& g : h.generators()) {
    if (!normalizes(g, l.group())) return false;
  }
  SearchOptions options;
  options.stop_on_first_new = true;
  auto result = subgroup_search(ambient, h.generators(), normalizer_hooks(ambient, l.group()), options);
  return !result.found_new;
}

bool is_normal(const Group& ambient, const Subgroup& h) {
  require_ambient(ambient, h);
  for (const Perm& g : ambient.generators()) {
    if (!normalizes(g, h.group())) return false;
  }
  return true;
}

Subgroup SubgroupLattice::subgroup(std::size_t i) const {
  const Group& g = index->group();
  GroupBuilder builder(g.degree());
  for (std::uint32_t x : entries[i].generators) builder.add(index->element(x));
  return Subgroup::trusted(g, std::move(builder).build());
}

SubgroupLattice subgroup_lattice(const Group& g) {
  if (g.order() > limits::subgroup_scan_bound()) {
    throw Error(ErrorKind::OrderTooLarge, "order " + std::to_string(g.order()) + " exceeds subgroup-scan bound " +
                                              std::to_string(limits::subgroup_scan_bound()));
  }
  SubgroupLattice lattice;
  auto index = std::make_shared<ElementIndex>(g);
  lattice.index = index;
  const ElementIndex& idx = *index;
  const std::size_t n = idx.size();

  // Conjugation by each ambient generator as a map on element indices.
  std::vector<std::vector<std::uint32_t>> conj;
  for (const Perm& s : g.generators()) {
    std::vector<std::uint32_t> map(n);
    for (std::uint32_t x = 0; x < n; ++x) map[x] = idx.index_of(conjugate(idx.element(x), s));
    conj.push_back(std::move(map));
  }

  // Only one subgroup per conjugacy class is extended; the extensions of its
  // conjugates are conjugates of its extensions.
  auto& entries = lattice.entries;
  std::vector<char> representative;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  auto known = [&](const Bitset& members) {
    auto it = by_hash.find(members.hash());
    if (it == by_hash.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(), [&](std::size_t e) { return entries[e].members == members; });
  };
  auto insert = [&](Bitset members, std::vector<std::uint32_t> gens, bool rep) {
    by_hash[members.hash()].push_back(entries.size());
    const std::uint64_t order = members.count();
    entries.push_back({std::move(members), std::move(gens), order});
    representative.push_back(rep ? 1 : 0);
  };
  auto add_class = [&](Bitset members, std::vector<std::uint32_t> gens) {
    if (known(members)) return;
    const std::size_t first = entries.size();
    insert(std::move(members), std::move(gens), true);
    for (std::size_t i = first; i < entries.size(); ++i) {
      for (const auto& map : conj) {
        Bitset image(n);
        for (std::uint32_t x : entries[i].members.indices()) image.set(map[x]);
        if (known(image)) continue;
        std::vector<std::uint32_t> image_gens;
        for (std::uint32_t x : entries[i].generators) image_gens.push_back(map[x]);
        insert(std::move(image), std::move(image_gens), false);
      }
    }
  };

  {
    Bitset trivial(n);
    trivial.set(idx.identity());
    add_class(std::move(trivial), {});
  }

  // Cyclic subgroups; the prime-power ones generate every subgroup.
  std::vector<char> covered(n, 0);
  std::vector<std::uint32_t> extenders;
  std::vector<std::uint32_t> powers;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (x == idx.identity() || covered[x]) continue;
    const auto& column = idx.right_column(x);
    Bitset members(n);
    powers.clear();
    for (std::uint32_t y = x;; y = column[y]) {
      powers.push_back(y);  // powers[k-1] = x^k
      members.set(y);
      if (y == idx.identity()) break;
    }
    const std::uint64_t m = powers.size();
    for (std::uint64_t k = 1; k < m; ++k) {
      if (std::gcd(k, m) == 1) covered[powers[k - 1]] = 1;
    }
    add_class(std::move(members), {x});
    if (prime_of_prime_power(m)) extenders.push_back(x);
  }

  std::vector<std::uint32_t> list;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!representative[i]) continue;
    for (std::uint32_t c : extenders) {
      if (entries[i].members.test(c)) continue;
      Bitset members = entries[i].members;
      std::vector<std::uint32_t> gens = entries[i].generators;
      gens.push_back(c);
      list = members.indices();
      const std::size_t old_size = list.size();
      const auto& c_column = idx.right_column(c);
      for (std::size_t k = 0; k < list.size(); ++k) {
        const std::uint32_t e = list[k];
        if (k < old_size) {
          const std::uint32_t y = c_column[e];
          if (!members.test(y)) {
            members.set(y);
            list.push_back(y);
          }
          continue;
        }
        for (std::uint32_t s : gens) {
          const std::uint32_t y = idx.right_column(s)[e];
          if (!members.test(y)) {
            members.set(y);
            list.push_back(y);
          }
        }
      }
      add_class(std::move(members), std::move(gens));
    }
  }

  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.order < b.order; });
  return lattice;
}

std::vector<Subgroup> enumerate_subgroups(const Group& g) {
  const SubgroupLattice lattice = subgroup_lattice(g);
  std::vector<Subgroup> out;
  out.reserve(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) out.push_back(lattice.subgroup(i));
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const Group& g) {
  const ElementIndex idx(g);
  std::vector<char> seen(idx.size(), 0);
  std::vector<ConjugacyClass> out;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t x = 0; x < idx.size(); ++x) {
    if (seen[x]) continue;
    seen[x] = 1;
    queue.assign(1, x);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const Perm& s : g.generators()) {
        const std::uint32_t y = idx.index_of(conjugate(idx.element(queue[i]), s));
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    out.push_back({idx.element(x), queue.size()});
  }
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const Group& g) {
  if (g.is_trivial()) return {};
  std::vector<Subgroup> candidates;
  for (const auto& cls : conjugacy_classes(g)) {
    if (!is_prime(cls.representative.order())) continue;
    Subgroup closure = normal_closure(g, Subgroup::generated(g, {cls.representative}));
    const bool duplicate = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const Subgroup& c) { return c == closure; });
    if (!duplicate) candidates.push_back(std::move(closure));
  }
  std::vector<Subgroup> out;
  for (const auto& c : candidates) {
    const bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](const Subgroup& d) {
      return d.order() < c.order() && d.group().is_subgroup_of(c.group());
    });
    if (minimal) out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.order() < b.order(); });
  return out;
}

bool is_simple(const Group& g) {
  const std::uint64_t order = g.order();
  if (order == 1) return false;
  if (is_prime(order)) return true;
  for (const auto& cls : conjugacy_classes(g)) {
    if (!is_prime(cls.representative.order())) continue;
    if (normal_closure(g, Subgroup::generated(g, {cls.representative})).order() != order) return false;
  }
  return true;
}

std::string fingerprint(const Group& h) {
  std::uint64_t acc = 1469598103934665603ull;
  auto mix = [&](const Perm& p) {
    for (Point x : p.raw()) {
      acc ^= x + 1;
      acc *= 1099511628211ull;
    }
    acc ^= 0xffu;
    acc *= 1099511628211ull;
  };
  std::vector<Perm> items;
  std::string tag;
  if (h.order() <= std::min<std::uint64_t>(100'000, limits::enumeration_bound())) {
    items = h.elements();
  } else {
    items = h.generators();
    tag = "g";
  }
  std::sort(items.begin(), items.end());
  for (const Perm& p : items) mix(p);
  return "o" + std::to_string(h.order()) + "-" + tag + hex64(acc);
}

std::vector<std::string> generator_strings(const Group& h) {
  std::vector<std::string> out;
  for (const Perm& g : h.generators()) out.push_back(g.to_string());
  return out;
}

}  // namespace normlab
