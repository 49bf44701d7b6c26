#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace normlab {

using Point = std::uint32_t;

// A permutation of the points 1..n.
//
// Action convention: points are written on the right and products are read
// left to right, so (a * b)(i) = b(a(i)): apply a first, then b. Conjugation
// x^g is g^-1 * x * g and a commutator [a, b] is a^-1 * b^-1 * a * b.
//
// The public interface speaks 1-based points. Internally images are stored
// 0-based; raw() and operator[] expose that form for the algorithms.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);  // identity

  static Perm from_images(std::span<const Point> images_one_based);
  static Perm from_raw(std::vector<Point> images_zero_based);
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }

  Point image(Point point) const;  // 1-based
  Point operator[](Point index) const { return images_[index]; }
  std::span<const Point> raw() const { return images_; }
  std::vector<Point> images() const;  // 1-based

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(long long exponent) const;
  std::uint64_t order() const;

  // Nontrivial cycles, 1-based, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;
  std::string to_string() const;

  // 0-based index of the first point not fixed, or degree() when none.
  Point first_moved() const;

  std::size_t hash() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) = default;

 private:
  std::vector<Point> images_;
};

Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
Perm conjugate(const Perm& x, const Perm& g);  // x^g
Perm commutator(const Perm& a, const Perm& b);

// "(1 2 3)(4 5)" or "()" for the identity. Whitespace separates points.
Perm parse_cycles(std::size_t degree, std::string_view text);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace normlab
