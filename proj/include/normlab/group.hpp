#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "normlab/chain.hpp"
#include "normlab/perm.hpp"

namespace normlab {

// A permutation group given by generators. The stabilizer chain is built on
// first demand (thread-safe) and is immutable afterwards; copies share it.
class Group {
 public:
  Group();  // trivial group on one point

  static Group from_generators(std::size_t degree, std::vector<Perm> generators);
  static Group trivial(std::size_t degree);
  // Adopts a completed chain; its input generators become the generators.
  static Group from_chain(StabilizerChain chain);

  std::size_t degree() const;
  const std::vector<Perm>& generators() const;
  const StabilizerChain& chain() const;

  std::uint64_t order() const;
  bool contains(const Perm& p) const;
  bool is_trivial() const { return order() == 1; }
  Perm identity() const { return Perm(degree()); }

  // Visits every element exactly once, built as transversal products. The
  // visitor returns false to stop early. Throws OrderTooLarge when the order
  // exceeds the enumeration bound, unless bounded is false.
  void for_each_element(const std::function<bool(const Perm&)>& visit, bool bounded = true) const;
  std::vector<Perm> elements() const;

  std::vector<Point> orbit(Point point) const;  // 1-based, sorted
  bool is_transitive() const;

  // Pointwise stabilizer of a 1-based point.
  Group stabilizer(Point point) const;

  // A freshly built chain whose base starts with the given 0-based points.
  StabilizerChain chain_with_base(std::span<const Point> base_prefix) const;

  bool same_object(const Group& other) const { return state_ == other.state_; }
  bool is_subgroup_of(const Group& other) const;
  // Mathematical equality: orders first, then generator containment.
  friend bool operator==(const Group& a, const Group& b);

 private:
  struct State;
  explicit Group(std::shared_ptr<State> state);
  std::shared_ptr<State> state_;
};

// Builds a group incrementally, skipping elements already generated.
class GroupBuilder {
 public:
  explicit GroupBuilder(std::size_t degree, std::span<const Point> base_prefix = {});
  bool add(const Perm& p);
  std::uint64_t order() const { return chain_.order(); }
  bool contains(const Perm& p) const { return chain_.contains(p); }
  Group build() &&;

 private:
  StabilizerChain chain_;
};

}  // namespace normlab
