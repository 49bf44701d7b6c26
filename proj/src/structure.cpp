#include "normlab/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "normlab/error.hpp"
#include "normlab/limits.hpp"
#include "normlab/numtheory.hpp"

namespace normlab {
namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
}

Subgroup commutator_subgroup(const Group& g) {
  const auto& gens = g.generators();
  std::vector<Perm> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return normal_closure(g, Subgroup::trusted(g, Group::from_generators(g.degree(), std::move(comms))));
}

// A p-element of n outside p, searching generators first.
std::optional<Perm> p_element_outside(const Group& n, const Group& p_sub, std::uint64_t p) {
  auto p_power = [p](const Perm& x) {
    const std::uint64_t m = x.order();
    return x.pow(static_cast<long long>(m / p_part(m, p)));
  };
  for (const Perm& x : n.generators()) {
    Perm y = p_power(x);
    if (!y.is_identity() && !p_sub.contains(y)) return y;
  }
  std::optional<Perm> found;
  n.for_each_element(
      [&](const Perm& x) {
        Perm y = p_power(x);
        if (!y.is_identity() && !p_sub.contains(y)) {
          found = std::move(y);
          return false;
        }
        return true;
      },
      false);
  return found;
}

}  // namespace

SeriesReport derived_series(const Group& g) {
  SeriesReport report;
  report.kind = SeriesKind::Derived;
  report.terms.push_back(Subgroup::whole(g));
  Group current = g;
  for (;;) {
    if (current.is_trivial()) {
      report.terminated = true;
      break;
    }
    Subgroup next = commutator_subgroup(current);
    if (next.order() == current.order()) break;
    current = next.group();
    report.terms.push_back(Subgroup::trusted(g, current));
  }
  return report;
}

bool is_solvable(const Group& g) { return derived_series(g).terminated; }

SeriesReport lower_central_series(const Group& g) {
  SeriesReport report;
  report.kind = SeriesKind::LowerCentral;
  report.terms.push_back(Subgroup::whole(g));
  Group current = g;
  for (;;) {
    if (current.is_trivial()) {
      report.terminated = true;
      break;
    }
    std::vector<Perm> comms;
    for (const Perm& x : current.generators()) {
      for (const Perm& s : g.generators()) {
        Perm c = commutator(x, s);
        if (!c.is_identity()) comms.push_back(std::move(c));
      }
    }
    Subgroup next =
        normal_closure(g, Subgroup::trusted(g, Group::from_generators(g.degree(), std::move(comms))));
    if (next.order() == current.order()) break;
    current = next.group();
    report.terms.push_back(next);
  }
  return report;
}

bool is_nilpotent(const Group& g) { return lower_central_series(g).terminated; }

int nilpotency_class(const Group& g) {
  const SeriesReport series = lower_central_series(g);
  if (!series.terminated) throw Error(ErrorKind::NotNilpotent, "lower central series stabilizes above 1");
  return static_cast<int>(series.terms.size()) - 1;
}

bool is_p_group(const Group& g, std::uint64_t p) { return is_power_of(g.order(), p); }

Subgroup sylow_subgroup(const Group& g, std::uint64_t p) {
  require_prime(p);
  const std::uint64_t target = p_part(g.order(), p);
  Subgroup current = Subgroup::trivial(g);
  if (target == 1) return current;
  int cap = 0;
  for (std::uint64_t t = target; t > 1; t /= p) ++cap;
  for (int step = 0; current.order() < target; ++step) {
    if (step >= cap) throw Error(ErrorKind::Internal, "Sylow growth exceeded log_p of the order");
    const Subgroup norm = normalizer(g, current);
    auto y = p_element_outside(norm.group(), current.group(), p);
    if (!y) throw Error(ErrorKind::Internal, "no p-element found in the normalizer");
    GroupBuilder builder(g.degree());
    for (const Perm& x : current.generators()) builder.add(x);
    builder.add(*y);
    current = Subgroup::trusted(g, std::move(builder).build());
    if (!is_p_group(current.group(), p)) throw Error(ErrorKind::Internal, "Sylow growth left the p-groups");
  }
  return current;
}

Subgroup p_core(const Group& g, std::uint64_t p) {
  require_prime(p);
  if (g.order() % p != 0) return Subgroup::trivial(g);
  return core(g, sylow_subgroup(g, p));
}

Subgroup fitting_subgroup(const Group& g) {
  GroupBuilder builder(g.degree());
  for (std::uint64_t p : prime_divisors(g.order())) {
    const Subgroup core_p = p_core(g, p);
    for (const Perm& x : core_p.generators()) builder.add(x);
  }
  return Subgroup::trusted(g, std::move(builder).build());
}

int fitting_length(const Group& g) {
  if (!is_solvable(g)) throw Error(ErrorKind::NotSolvable, "Fitting length needs a solvable group");
  int length = 0;
  Group current = g;
  while (!current.is_trivial()) {
    const Subgroup fit = fitting_subgroup(current);
    current = quotient(current, fit).image();
    ++length;
  }
  return length;
}

bool is_hall(const Group& g, const Subgroup& h) {
  if (!h.group().is_subgroup_of(g)) throw Error(ErrorKind::NotASubgroup, "is_hall: H is not contained in G");
  const std::uint64_t order = h.order();
  return std::gcd(order, g.order() / order) == 1;
}

bool is_p_nilpotent(const Group& g, std::uint64_t p) {
  require_prime(p);
  if (g.order() % p != 0 || is_p_group(g, p)) return true;
  GroupBuilder builder(g.degree());
  g.for_each_element([&](const Perm& x) {
    const std::uint64_t m = x.order();
    Perm y = x.pow(static_cast<long long>(p_part(m, p)));
    if (!y.is_identity() && !builder.contains(y)) builder.add(y);
    return true;
  });
  const Group generated = std::move(builder).build();
  if (!is_normal(g, Subgroup::trusted(g, generated))) {
    throw Error(ErrorKind::Internal, "subgroup generated by p'-elements is not normal");
  }
  return generated.order() % p != 0;
}

Subgroup thompson_subgroup(const Group& p_group) {
  if (!prime_of_prime_power(p_group.order()) && !p_group.is_trivial()) {
    throw Error(ErrorKind::NotPGroup, "order " + std::to_string(p_group.order()) + " is not a prime power");
  }
  const SubgroupLattice lattice = subgroup_lattice(p_group);
  const ElementIndex& idx = *lattice.index;
  auto abelian = [&](const SubgroupLattice::Entry& e) {
    for (std::size_t i = 0; i < e.generators.size(); ++i) {
      for (std::size_t j = i + 1; j < e.generators.size(); ++j) {
        const auto a = e.generators[i];
        const auto b = e.generators[j];
        if (idx.multiply(a, b) != idx.multiply(b, a)) return false;
      }
    }
    return true;
  };
  std::uint64_t best = 0;
  for (const auto& e : lattice.entries) {
    if (e.order > best && abelian(e)) best = e.order;
  }
  GroupBuilder builder(p_group.degree());
  for (const auto& e : lattice.entries) {
    if (e.order != best || !abelian(e)) continue;
    for (std::uint32_t x : e.generators) builder.add(idx.element(x));
  }
  return Subgroup::trusted(p_group, std::move(builder).build());
}

bool is_cyclic(const Group& g) {
  const std::uint64_t order = g.order();
  if (order == 1 || is_prime(order)) return true;
  if (!is_abelian(g)) return false;
  for (const Perm& x : g.generators()) {
    if (x.order() == order) return true;
  }
  bool found = false;
  g.for_each_element([&](const Perm& x) {
    found = x.order() == order;
    return !found;
  });
  return found;
}

bool is_generalized_quaternion(const Group& p_group) {
  const std::uint64_t order = p_group.order();
  if (!is_power_of(order, 2)) throw Error(ErrorKind::NotPGroup, "generalized quaternion test needs a 2-group");
  if (order < 8 || is_abelian(p_group)) return false;
  int involutions = 0;
  p_group.for_each_element([&](const Perm& x) {
    if (x.order() == 2) ++involutions;
    return involutions <= 1;
  });
  return involutions == 1;
}

struct QuotientGroup::Cosets {
  Group modulus;
  std::vector<Perm> reps;
  std::unordered_map<Perm, std::uint32_t, PermHash> index;

  // The element of the coset N*x with lexicographically least images of the
  // modulus base points.
  Perm canonical(const Perm& x) const {
    const StabilizerChain& chain = modulus.chain();
    Perm c = x;
    for (std::size_t i = 0; i < chain.depth(); ++i) {
      const auto& lvl = chain.level(i);
      std::size_t best = 0;
      for (std::size_t k = 1; k < lvl.orbit.size(); ++k) {
        if (c[lvl.orbit[k]] < c[lvl.orbit[best]]) best = k;
      }
      if (best != 0) c = lvl.transversal[best] * c;
    }
    return c;
  }

  std::uint32_t locate(const Perm& x) const {
    auto it = index.find(canonical(x));
    if (it == index.end()) throw Error(ErrorKind::Internal, "coset lookup failed");
    return it->second;
  }

  Perm act(const Perm& g) const {
    std::vector<Point> images(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) images[i] = locate(reps[i] * g);
    return Perm::from_raw(std::move(images));
  }
};

QuotientGroup::QuotientGroup(Group source, Subgroup modulus, Group image, std::shared_ptr<const Cosets> cosets)
    : source_(std::move(source)), modulus_(std::move(modulus)), image_(std::move(image)), cosets_(std::move(cosets)) {}

std::size_t QuotientGroup::index() const { return cosets_ ? cosets_->reps.size() : source_.order(); }

Perm QuotientGroup::project(const Perm& g) const { return cosets_ ? cosets_->act(g) : g; }

Subgroup QuotientGroup::project(const Subgroup& h) const {
  std::vector<Perm> gens;
  for (const Perm& x : h.generators()) {
    Perm y = project(x);
    if (!y.is_identity()) gens.push_back(std::move(y));
  }
  return Subgroup::trusted(image_, Group::from_generators(image_.degree(), std::move(gens)));
}

Perm QuotientGroup::lift(const Perm& image_element) const {
  if (!cosets_) return image_element;
  return cosets_->reps[image_element[0]];
}

Subgroup QuotientGroup::preimage(const Subgroup& h) const {
  GroupBuilder builder(source_.degree());
  for (const Perm& x : modulus_.generators()) builder.add(x);
  for (const Perm& y : h.generators()) builder.add(lift(y));
  return Subgroup::trusted(source_, std::move(builder).build());
}

QuotientGroup quotient(const Group& g, const Subgroup& n) {
  if (!n.group().is_subgroup_of(g)) throw Error(ErrorKind::NotASubgroup, "modulus is not a subgroup");
  if (!is_normal(g, Subgroup::trusted(g, n.group()))) throw Error(ErrorKind::NotNormal, "modulus is not normal");
  const Subgroup modulus = Subgroup::trusted(g, n.group());
  if (n.is_trivial()) return QuotientGroup(g, modulus, g, nullptr);

  const std::uint64_t index = g.order() / n.order();
  if (index > limits::quotient_degree_bound()) {
    throw Error(ErrorKind::IndexTooLarge, "index " + std::to_string(index) + " exceeds quotient degree bound");
  }
  auto cosets = std::make_shared<QuotientGroup::Cosets>();
  cosets->modulus = n.group();
  cosets->reps.push_back(g.identity());
  cosets->index.emplace(cosets->canonical(g.identity()), 0);
  for (std::size_t i = 0; i < cosets->reps.size(); ++i) {
    for (const Perm& s : g.generators()) {
      Perm y = cosets->reps[i] * s;
      Perm key = cosets->canonical(y);
      if (cosets->index.contains(key)) continue;
      cosets->index.emplace(std::move(key), static_cast<std::uint32_t>(cosets->reps.size()));
      cosets->reps.push_back(std::move(y));
    }
  }
  if (cosets->reps.size() != index) throw Error(ErrorKind::Internal, "coset enumeration size mismatch");

  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) {
    Perm img = cosets->act(s);
    if (!img.is_identity()) gens.push_back(std::move(img));
  }
  Group image = Group::from_generators(static_cast<std::size_t>(index), std::move(gens));
  return QuotientGroup(g, modulus, std::move(image), std::move(cosets));
}

}  // namespace normlab
