#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "normlab/subgroup.hpp"

namespace normlab {

enum class SeriesKind { Derived, LowerCentral };

struct SeriesReport {
  SeriesKind kind = SeriesKind::Derived;
  std::vector<Subgroup> terms;  // terms[0] is the group itself, strictly descending
  bool terminated = false;      // the last term is trivial
};

SeriesReport derived_series(const Group& g);
bool is_solvable(const Group& g);

SeriesReport lower_central_series(const Group& g);
bool is_nilpotent(const Group& g);
int nilpotency_class(const Group& g);  // throws NotNilpotent

bool is_p_group(const Group& g, std::uint64_t p);

Subgroup sylow_subgroup(const Group& g, std::uint64_t p);
Subgroup p_core(const Group& g, std::uint64_t p);
Subgroup fitting_subgroup(const Group& g);
int fitting_length(const Group& g);  // throws NotSolvable

bool is_hall(const Group& g, const Subgroup& h);
bool is_p_nilpotent(const Group& g, std::uint64_t p);
Subgroup thompson_subgroup(const Group& p_group);
bool is_cyclic(const Group& g);
bool is_generalized_quaternion(const Group& p_group);

// G/N realized as the action of G on the right cosets of N. A trivial
// modulus keeps the source representation as the image.
class QuotientGroup {
 public:
  const Group& source() const { return source_; }
  const Subgroup& modulus() const { return modulus_; }
  const Group& image() const { return image_; }
  std::size_t index() const;

  Perm project(const Perm& g) const;
  // Image of a subgroup of the source, as a subgroup of image().
  Subgroup project(const Subgroup& h) const;
  // Some preimage of an element of image().
  Perm lift(const Perm& image_element) const;
  // Full preimage (contains the modulus) of a subgroup of image().
  Subgroup preimage(const Subgroup& h) const;

 private:
  friend QuotientGroup quotient(const Group& g, const Subgroup& n);
  struct Cosets;

  QuotientGroup(Group source, Subgroup modulus, Group image, std::shared_ptr<const Cosets> cosets);

  Group source_;
  Subgroup modulus_;
  Group image_;
  std::shared_ptr<const Cosets> cosets_;  // null for the trivial modulus
};

QuotientGroup quotient(const Group& g, const Subgroup& n);

}  // namespace normlab
