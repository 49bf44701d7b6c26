#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "normlab/group.hpp"

namespace normlab {

// Fixed-size set of element indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const;
  std::size_t intersection_count(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;
  std::size_t hash() const;
  std::vector<std::uint32_t> indices() const;

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Dense numbering 0..|G|-1 of the elements of an enumerable group. Products
// are evaluated on base images only, so right multiplication costs O(base).
class ElementIndex {
 public:
  explicit ElementIndex(const Group& group);

  const Group& group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  const Perm& element(std::uint32_t i) const { return elements_[i]; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t index_of(const Perm& p) const;
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint64_t element_order(std::uint32_t a) const { return orders_[a]; }

  // x -> x * c for every x. Cached; not thread-safe.
  const std::vector<std::uint32_t>& right_column(std::uint32_t c) const;

 private:
  std::uint64_t pack(const Point* images) const;
  std::uint32_t lookup(const Point* images) const;

  Group group_;
  std::vector<Point> base_;
  std::size_t bits_ = 0;
  std::vector<Perm> elements_;
  std::vector<Point> base_images_;  // size() x base_.size()
  std::vector<std::uint64_t> orders_;
  std::unordered_map<std::uint64_t, std::uint32_t> packed_;
  std::unordered_map<Perm, std::uint32_t, PermHash> by_perm_;  // when packing does not fit
  std::uint32_t identity_ = 0;
  mutable std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> columns_;
};

}  // namespace normlab
