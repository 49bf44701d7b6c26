#include "normlab/search.hpp"

#include <optional>

#include "normlab/error.hpp"
#include "normlab/limits.hpp"

namespace normlab {
namespace {

class Backtrack {
 public:
  Backtrack(const StabilizerChain& chain, const SearchHooks& hooks)
      : chain_(chain), hooks_(hooks), base_(chain.base()), images_(base_.size()), budget_(limits::search_node_budget()) {}

  // Looks for an accepted element mapping base[i] to orbit point `index`
  // while fixing base[0..i-1].
  std::optional<Perm> search_coset(std::size_t i, std::size_t index) {
    const auto& lvl = chain_.level(i);
    for (std::size_t j = 0; j < i; ++j) images_[j] = base_[j];
    images_[i] = lvl.orbit[index];
    tick();
    if (!node_ok(i)) return std::nullopt;
    return descend(i + 1, lvl.transversal[index]);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool node_ok(std::size_t depth) const {
    return !hooks_.node_ok || hooks_.node_ok(std::span<const Point>(images_.data(), depth + 1));
  }

  void tick() {
    if (++nodes_ > budget_) throw Error(ErrorKind::OrderTooLarge, "backtrack search node budget exhausted");
  }

  // partial = x_{l-1} * ... * x_i
  std::optional<Perm> descend(std::size_t l, const Perm& partial) {
    if (l == chain_.depth()) {
      if (hooks_.accept(partial)) return partial;
      return std::nullopt;
    }
    const auto& lvl = chain_.level(l);
    for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
      tick();
      images_[l] = partial[lvl.orbit[k]];
      if (!node_ok(l)) continue;
      if (auto hit = descend(l + 1, lvl.transversal[k] * partial)) return hit;
    }
    return std::nullopt;
  }

  const StabilizerChain& chain_;
  const SearchHooks& hooks_;
  std::vector<Point> base_;
  std::vector<Point> images_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
};

}  // namespace

SearchResult subgroup_search(const Group& ambient, std::span<const Perm> known, const SearchHooks& hooks,
                             SearchOptions options) {
  const StabilizerChain& chain = ambient.chain();
  const std::vector<Point> base = chain.base();
  StabilizerChain found(ambient.degree(), base);
  for (const Perm& k : known) found.add_generator(k);

  Backtrack bt(chain, hooks);
  bool found_new = false;
  for (std::size_t i = chain.depth(); i-- > 0;) {
    const auto& lvl = chain.level(i);
    for (std::size_t index = 1; index < lvl.orbit.size(); ++index) {
      if (found.level(i).in_orbit(lvl.orbit[index])) continue;
      if (auto hit = bt.search_coset(i, index)) {
        found.add_generator(*hit);
        found_new = true;
        if (options.stop_on_first_new) {
          return {Group::from_chain(std::move(found)), true, bt.nodes()};
        }
      }
    }
  }
  return {Group::from_chain(std::move(found)), found_new, bt.nodes()};
}

}  // namespace normlab
