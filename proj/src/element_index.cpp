#include "normlab/element_index.hpp"

#include <bit>

#include "normlab/error.hpp"

namespace normlab {

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Bitset::intersection_count(const Bitset& other) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::size_t Bitset::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::vector<std::uint32_t> Bitset::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

ElementIndex::ElementIndex(const Group& group) : group_(group) {
  elements_ = group.elements();
  base_ = group.chain().base();
  bits_ = static_cast<std::size_t>(std::bit_width(group.degree()));
  const std::size_t k = base_.size();
  const bool packable = k * bits_ <= 64;

  base_images_.resize(elements_.size() * k);
  orders_.resize(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    const Perm& e = elements_[i];
    for (std::size_t j = 0; j < k; ++j) base_images_[i * k + j] = e[base_[j]];
    orders_[i] = e.order();
    if (e.is_identity()) identity_ = i;
    if (packable) {
      packed_.emplace(pack(base_images_.data() + i * k), i);
    } else {
      by_perm_.emplace(e, i);
    }
  }
}

std::uint64_t ElementIndex::pack(const Point* images) const {
  std::uint64_t key = 0;
  for (std::size_t j = 0; j < base_.size(); ++j) key = (key << bits_) | images[j];
  return key;
}

std::uint32_t ElementIndex::lookup(const Point* images) const {
  auto it = packed_.find(pack(images));
  if (it == packed_.end()) throw Error(ErrorKind::NotASubgroup, "element not in indexed group");
  return it->second;
}

std::uint32_t ElementIndex::index_of(const Perm& p) const {
  if (!by_perm_.empty() || packed_.empty()) {
    auto it = by_perm_.find(p);
    if (it == by_perm_.end()) throw Error(ErrorKind::NotASubgroup, "element " + p.to_string() + " not in group");
    return it->second;
  }
  std::vector<Point> images(base_.size());
  for (std::size_t j = 0; j < base_.size(); ++j) images[j] = p[base_[j]];
  const std::uint32_t i = lookup(images.data());
  if (elements_[i] != p) throw Error(ErrorKind::NotASubgroup, "element " + p.to_string() + " not in group");
  return i;
}

std::uint32_t ElementIndex::multiply(std::uint32_t a, std::uint32_t b) const {
  if (!by_perm_.empty()) return by_perm_.at(elements_[a] * elements_[b]);
  const std::size_t k = base_.size();
  Point images[64];
  const Perm& rhs = elements_[b];
  for (std::size_t j = 0; j < k; ++j) images[j] = rhs[base_images_[a * k + j]];
  return lookup(images);
}

std::uint32_t ElementIndex::inverse(std::uint32_t a) const { return index_of(elements_[a].inverse()); }

const std::vector<std::uint32_t>& ElementIndex::right_column(std::uint32_t c) const {
  auto it = columns_.find(c);
  if (it != columns_.end()) return it->second;
  std::vector<std::uint32_t> column(size());
  for (std::uint32_t x = 0; x < size(); ++x) column[x] = multiply(x, c);
  return columns_.emplace(c, std::move(column)).first->second;
}

}  // namespace normlab
