#include "normlab/chain.hpp"

#include <limits>
#include <string>

#include "normlab/error.hpp"

namespace normlab {

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Point> base_prefix) : degree_(degree) {
  std::vector<bool> used(degree, false);
  for (Point b : base_prefix) {
    if (b >= degree) throw Error(ErrorKind::PointOutOfRange, "base point " + std::to_string(b + 1));
    if (used[b]) throw Error(ErrorKind::DuplicatePoint, "base point " + std::to_string(b + 1));
    used[b] = true;
    add_level(b);
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& l : levels_) out.push_back(l.base);
  return out;
}

void StabilizerChain::add_level(Point base_point) {
  Level l;
  l.base = base_point;
  l.position.assign(degree_, -1);
  l.position[base_point] = 0;
  l.orbit.push_back(base_point);
  l.transversal.emplace_back(degree_);
  l.inverse_transversal.emplace_back(degree_);
  levels_.push_back(std::move(l));
  checked_.emplace_back();
}

void StabilizerChain::extend_orbit(std::size_t li) {
  Level& l = levels_[li];
  for (std::size_t idx = 0; idx < l.orbit.size(); ++idx) {
    const Point x = l.orbit[idx];
    for (const Perm& s : l.generators) {
      const Point y = s[x];
      if (l.position[y] >= 0) continue;
      l.position[y] = static_cast<std::int32_t>(l.orbit.size());
      l.orbit.push_back(y);
      Perm u = l.transversal[idx] * s;
      l.inverse_transversal.push_back(u.inverse());
      l.transversal.push_back(std::move(u));
    }
  }
}

void StabilizerChain::add_strong_generator(std::size_t li, const Perm& h) {
  levels_[li].generators.push_back(h);
  extend_orbit(li);
}

StabilizerChain::SiftResult StabilizerChain::sift(Perm g, std::size_t start) const {
  if (g.degree() != degree_) {
    throw Error(ErrorKind::DegreeMismatch,
                "element of degree " + std::to_string(g.degree()) + " against chain of degree " +
                    std::to_string(degree_));
  }
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    const Point b = g[l.base];
    const std::int32_t pos = l.position[b];
    if (pos < 0) return {std::move(g), i};
    if (pos > 0) g = g * l.inverse_transversal[static_cast<std::size_t>(pos)];
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Perm& g) const {
  return sift(g).residue.is_identity();
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t result = 1;
  for (const auto& l : levels_) {
    const std::uint64_t size = l.orbit.size();
    if (result > std::numeric_limits<std::uint64_t>::max() / size) {
      throw Error(ErrorKind::OrderTooLarge, "group order exceeds 64 bits");
    }
    result *= size;
  }
  return result;
}

bool StabilizerChain::add_generator(const Perm& g) {
  if (g.degree() != degree_) {
    throw Error(ErrorKind::DegreeMismatch,
                "generator of degree " + std::to_string(g.degree()) + " for degree " + std::to_string(degree_));
  }
  auto [h, drop] = sift(g);
  if (h.is_identity()) return false;
  inputs_.push_back(g);
  if (drop == levels_.size()) add_level(h.first_moved());
  for (std::size_t l = 0; l <= drop; ++l) add_strong_generator(l, h);
  schreier_sims(drop);
  return true;
}

void StabilizerChain::schreier_sims(std::size_t start_level) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start_level);
  while (i >= 0) {
    const std::size_t li = static_cast<std::size_t>(i);
    bool restarted = false;
    auto& marks = checked_[li];
    for (std::size_t j = 0; j < levels_[li].orbit.size() && !restarted; ++j) {
      if (marks.size() <= j) marks.resize(j + 1);
      for (std::size_t s = 0; s < levels_[li].generators.size(); ++s) {
        if (marks[j].size() <= s) marks[j].resize(levels_[li].generators.size(), 0);
        if (marks[j][s]) continue;
        marks[j][s] = 1;

        const Level& l = levels_[li];
        const Perm& gen = l.generators[s];
        const Point img = gen[l.orbit[j]];
        const auto target = static_cast<std::size_t>(l.position[img]);
        Perm schreier = l.transversal[j] * gen;
        if (schreier == l.transversal[target]) continue;
        schreier = schreier * l.inverse_transversal[target];

        auto [h, drop] = sift(std::move(schreier), li + 1);
        if (h.is_identity()) continue;
        if (drop == levels_.size()) add_level(h.first_moved());
        for (std::size_t m = li + 1; m <= drop; ++m) add_strong_generator(m, h);
        i = static_cast<std::ptrdiff_t>(drop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

}  // namespace normlab
