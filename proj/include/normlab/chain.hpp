#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "normlab/perm.hpp"

namespace normlab {

// Base and strong generating set built by deterministic Schreier-Sims with
// explicit transversals.
//
// Level i stores base point b_i, the strong generators fixing b_0..b_{i-1},
// the orbit of b_i under them, and for every orbit point x a transversal
// element u_x with b_i^{u_x} = x (plus its inverse, for sifting).
//
// Every element g factors uniquely as g = x_{k-1} * ... * x_1 * x_0 with
// x_i drawn from the level-i transversal.
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;  // 0-based
    std::vector<Perm> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;  // degree-sized, -1 off the orbit
    std::vector<Perm> transversal;
    std::vector<Perm> inverse_transversal;

    bool in_orbit(Point x) const { return position[x] >= 0; }
  };

  struct SiftResult {
    Perm residue;
    std::size_t level;  // first level where sifting stopped; depth() on success
  };

  StabilizerChain() = default;
  // base_prefix is 0-based; further base points are appended as needed,
  // always choosing the first moved point of the offending element.
  explicit StabilizerChain(std::size_t degree, std::span<const Point> base_prefix = {});

  // Adds g to the group. Returns false (and changes nothing) when g is
  // already a member.
  bool add_generator(const Perm& g);

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;  // 0-based

  // The generators accepted by add_generator, in order.
  const std::vector<Perm>& input_generators() const { return inputs_; }

  std::uint64_t order() const;
  SiftResult sift(Perm g, std::size_t start = 0) const;
  bool contains(const Perm& g) const;

 private:
  void add_level(Point base_point);
  void add_strong_generator(std::size_t level, const Perm& h);
  void extend_orbit(std::size_t level);
  void schreier_sims(std::size_t start_level);

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
  // checked_[level][orbit_index][generator_index]: the Schreier generator was
  // already sifted. Orbits and generator lists only grow, so marks stay valid.
  std::vector<std::vector<std::vector<char>>> checked_;
  std::vector<Perm> inputs_;
};

}  // namespace normlab
