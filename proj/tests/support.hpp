#pragma once

// Shared fixtures and hand-rolled random generators for the tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "normlab/catalog.hpp"
#include "normlab/group.hpp"
#include "normlab/subgroup.hpp"

namespace support {

using normlab::Group;
using normlab::Perm;
using normlab::Subgroup;

inline Perm cyc(std::size_t degree, const std::string& text) { return normlab::parse_cycles(degree, text); }

inline Group gen(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Perm> perms;
  for (const auto& s : gens) perms.push_back(cyc(degree, s));
  return Group::from_generators(degree, perms);
}

inline Group named(const std::string& spec) { return normlab::build(normlab::parse_spec(spec)).group; }

inline Subgroup sub(const Group& g, const std::vector<std::string>& gens) {
  std::vector<Perm> perms;
  for (const auto& s : gens) perms.push_back(cyc(g.degree(), s));
  return Subgroup::generated(g, perms);
}

inline Subgroup select(const Group& g, const std::string& selector) {
  return normlab::select(g, normlab::parse_selector(selector));
}

// Quaternion group of order 8 as the regular representation.
inline Group q8() {
  return gen(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"});
}

using Rng = std::mt19937_64;

inline Perm random_perm(Rng& rng, std::size_t degree) {
  std::vector<normlab::Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm::from_raw(std::move(images));
}

// A random element as a product of generators and their inverses. Not
// uniform, but enough to reach every element with a few dozen factors.
inline Perm random_element(Rng& rng, const Group& g, int length = 24) {
  Perm x = g.identity();
  const auto& gens = g.generators();
  if (gens.empty()) return x;
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < length; ++i) {
    const Perm& s = gens[pick(rng)];
    x = x * (flip(rng) ? s : s.inverse());
  }
  return x;
}

// Subgroup generated by one to three random elements.
inline Subgroup random_subgroup(Rng& rng, const Group& g) {
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<Perm> gens;
  for (int i = count(rng); i > 0; --i) gens.push_back(random_element(rng, g));
  return Subgroup::generated(g, gens);
}

// Catalog groups used by the property tests, all of order at most 200.
inline const std::vector<std::string>& small_catalog() {
  static const std::vector<std::string> specs{
      "C:1",   "C:2",   "C:6",    "C:12",   "S:3",    "S:4",       "A:4",      "A:5",     "D:2",
      "D:4",   "D:5",   "D:6",    "D:9",    "D:12",   "AGL1:5",    "AGL1:7",   "AGL1:11", "AGL1:13",
      "S:5",   "PSL2:7", "C:2xC:2xC:2", "S:3xC:2", "S:3xC:3", "D:4xC:2", "A:4xC:2", "S:3xS:3", "A:4xC:3"};
  return specs;
}

}  // namespace support
