// Randomized and exhaustive checks of the library against the closure
// oracle. Seeds are fixed so failures replay.

#include "doctest.h"
#include "normlab/numtheory.hpp"
#include "normlab/structure.hpp"
#include "normlab/theorem_lab.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace normlab;
using support::named;

namespace {

const std::vector<std::pair<std::string, Group>>& catalog() {
  static const auto groups = [] {
    std::vector<std::pair<std::string, Group>> out;
    for (const auto& spec : support::small_catalog()) out.emplace_back(spec, named(spec));
    return out;
  }();
  return groups;
}

}  // namespace

TEST_CASE("chain order and membership agree with closure") {
  support::Rng rng(101);
  for (const auto& [spec, g] : catalog()) {
    CAPTURE(spec);
    const oracle::Set all = oracle::elements(g);
    CHECK(g.order() == all.size());
    for (const auto& x : all) CHECK(g.contains(oracle::to(x)));
    int outside = 0;
    for (int i = 0; i < 400 && outside < 100; ++i) {
      const Perm r = support::random_perm(rng, g.degree());
      if (all.contains(oracle::from(r))) continue;
      ++outside;
      CHECK_FALSE(g.contains(r));
    }
  }
}

TEST_CASE("base order does not change order or membership") {
  support::Rng rng(202);
  for (const auto& [spec, g] : catalog()) {
    CAPTURE(spec);
    std::vector<Point> base = g.chain().base();
    std::reverse(base.begin(), base.end());
    std::vector<Point> shuffled(g.degree());
    std::iota(shuffled.begin(), shuffled.end(), 0u);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (const auto& prefix : {base, shuffled}) {
      const StabilizerChain c = g.chain_with_base(prefix);
      CHECK(c.order() == g.order());
      for (int i = 0; i < 30; ++i) {
        const Perm x = i % 2 ? support::random_element(rng, g) : support::random_perm(rng, g.degree());
        CHECK(c.contains(x) == g.contains(x));
      }
    }
  }
}

TEST_CASE("backtrack normalizer and centralizer match the exhaustive filter") {
  support::Rng rng(303);
  for (const auto& [spec, g] : catalog()) {
    CAPTURE(spec);
    const oracle::Set all = oracle::elements(g);
    for (int i = 0; i < 8; ++i) {
      const Subgroup h = support::random_subgroup(rng, g);
      const oracle::Set hs = oracle::to_set(h);
      const Subgroup n = normalizer(g, h);
      CHECK(n == normalizer(g, h, NormalizerMethod::Exhaustive));
      CHECK(oracle::to_set(n) == oracle::normalizer(all, hs));
      CHECK(oracle::to_set(centralizer(g, h)) == oracle::centralizer(all, hs));
      CHECK(h.group().is_subgroup_of(n.group()));
      CHECK(is_normal(g, h) == (n.order() == g.order()));
      CHECK(is_normal(g, h) == oracle::is_normal(all, hs));
    }
  }
}

TEST_CASE("backtrack normalizer on larger groups") {
  support::Rng rng(304);
  for (const char* spec : {"S:6", "A:6", "PSL2:11", "AGL1:23", "S:4xS:3", "A:4xA:4"}) {
    CAPTURE(spec);
    const Group g = named(spec);
    for (int i = 0; i < 6; ++i) {
      const Subgroup h = support::random_subgroup(rng, g);
      CHECK(normalizer(g, h) == normalizer(g, h, NormalizerMethod::Exhaustive));
    }
  }
}

TEST_CASE("core is the largest normal subgroup inside H") {
  for (const char* spec : {"S:4", "D:6", "A:4xC:2", "S:3xS:3", "AGL1:7"}) {
    CAPTURE(spec);
    const Group g = named(spec);
    const auto lattice = enumerate_subgroups(g);
    for (const Subgroup& h : lattice) {
      const Subgroup c = core(g, h);
      CHECK(is_normal(g, c));
      CHECK(c.group().is_subgroup_of(h.group()));
      for (const Subgroup& n : lattice) {
        if (n.order() <= h.order() && is_normal(g, n) && n.group().is_subgroup_of(h.group())) {
          CHECK(n.group().is_subgroup_of(c.group()));
        }
      }
    }
  }
}

TEST_CASE("lattice size matches brute force for order up to 48") {
  for (const auto& [spec, g] : catalog()) {
    if (g.order() > 48) continue;
    CAPTURE(spec);
    const auto fast = enumerate_subgroups(g);
    const auto slow = oracle::all_subgroups(g.degree(), oracle::elements(g));
    CHECK(fast.size() == slow.size());
  }
}

TEST_CASE("Fitting subgroup is the largest nilpotent normal subgroup") {
  for (const auto& [spec, g] : catalog()) {
    CAPTURE(spec);
    const Subgroup f = fitting_subgroup(g);
    CHECK(is_nilpotent(f.group()));
    CHECK(is_normal(g, f));
    for (const Subgroup& n : enumerate_subgroups(g)) {
      if (is_normal(g, n) && is_nilpotent(n.group())) CHECK(n.group().is_subgroup_of(f.group()));
    }
  }
}

TEST_CASE("Sylow subgroups have full p-part and are conjugate") {
  support::Rng rng(404);
  for (const auto& [spec, g] : catalog()) {
    CAPTURE(spec);
    const oracle::Set all = oracle::elements(g);
    // Same group, generators reordered and padded: an independent run.
    std::vector<Perm> gens = g.generators();
    gens.push_back(support::random_element(rng, g));
    std::shuffle(gens.begin(), gens.end(), rng);
    const Group other = Group::from_generators(g.degree(), gens);
    for (std::uint64_t p : prime_divisors(g.order())) {
      CAPTURE(p);
      const Subgroup a = sylow_subgroup(g, p);
      const Subgroup b = sylow_subgroup(other, p);
      CHECK(a.order() == oracle::p_part(g.order(), p));
      CHECK(b.order() == a.order());
      const oracle::Set as = oracle::to_set(a);
      const oracle::Set bs = oracle::to_set(b);
      bool conjugate = false;
      for (const auto& x : all) {
        if (oracle::conjugate(as, x) == bs) {
          conjugate = true;
          break;
        }
      }
      CHECK(conjugate);

      // O_p is the intersection of all Sylow p-subgroups.
      oracle::Set meet = as;
      for (const auto& x : all) meet = oracle::intersect(meet, oracle::conjugate(as, x));
      CHECK(oracle::to_set(p_core(g, p)) == meet);
    }
  }
}

TEST_CASE("quotient projection is a homomorphism") {
  support::Rng rng(505);
  for (const auto& [spec, g] : catalog()) {
    CAPTURE(spec);
    for (const Subgroup& n : {fitting_subgroup(g), derived_series(g).terms.back(), center(g)}) {
      const QuotientGroup q = quotient(g, n);
      CHECK(q.image().order() * n.order() == g.order());
      const auto& gens = g.generators();
      for (const Perm& a : gens) {
        for (const Perm& b : gens) CHECK(q.project(a * b) == q.project(a) * q.project(b));
      }
      for (int i = 0; i < 10; ++i) {
        const Perm a = support::random_element(rng, g);
        const Perm b = support::random_element(rng, g);
        const Perm ab = q.project(a * b);
        CHECK(ab == q.project(a) * q.project(b));
        CHECK(q.image().contains(ab));
        CHECK(q.project(q.lift(ab)) == ab);
      }
    }
  }
}

TEST_CASE("every group of order below 60 is solvable") {
  for (const auto& [spec, g] : catalog()) {
    CAPTURE(spec);
    CHECK(is_solvable(g) == oracle::solvable(g.degree(), oracle::elements(g)));
    CHECK(is_nilpotent(g) == oracle::nilpotent(g.degree(), oracle::elements(g)));
    if (g.order() < 60) CHECK(is_solvable(g));
    for (const Subgroup& t : derived_series(g).terms) CHECK(is_normal(g, t));
  }
}

TEST_CASE("maximal-normalizer verdict is invariant under conjugation") {
  support::Rng rng(606);
  for (const char* spec : {"S:4", "D:6", "AGL1:7", "S:3xS:3", "A:5", "A:4xC:2"}) {
    CAPTURE(spec);
    const Group g = named(spec);
    for (const Subgroup& h : enumerate_subgroups(g)) {
      if (h.order() == g.order()) continue;
      const Perm x = support::random_element(rng, g);
      const Subgroup hx = Subgroup::trusted(g, conjugate_group(h.group(), x));
      for (Def21Mode mode : {Def21Mode::FitNormal, Def21Mode::HNormal}) {
        CHECK(is_maximal_normalizer(g, h, mode).passed == is_maximal_normalizer(g, hx, mode).passed);
      }
    }
  }
}

TEST_CASE("Frobenius decompositions satisfy their invariants") {
  for (const auto& [spec, g] : catalog()) {
    CAPTURE(spec);
    const auto d = frobenius_decomposition(g);
    if (!d) continue;
    CHECK(is_normal(g, d->kernel));
    CHECK(intersection(g, d->kernel, d->complement).is_trivial());
    CHECK(d->kernel.order() * d->complement.order() == g.order());
    const oracle::Set k = oracle::to_set(d->kernel);
    for (const auto& h : oracle::to_set(d->complement)) {
      if (h == oracle::identity(g.degree())) continue;
      CHECK(oracle::centralizer(k, {h}).size() == 1);
    }
  }
}
