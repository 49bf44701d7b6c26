#include "normlab/group.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "normlab/error.hpp"
#include "normlab/limits.hpp"

namespace normlab {

struct Group::State {
  std::size_t degree = 1;
  std::vector<Perm> generators;
  mutable std::once_flag once;
  mutable StabilizerChain chain;
};

Group::Group() : Group(trivial(1)) {}

Group::Group(std::shared_ptr<State> state) : state_(std::move(state)) {}

Group Group::from_generators(std::size_t degree, std::vector<Perm> generators) {
  if (degree < 1) throw Error(ErrorKind::EmptyDegree, "group degree must be positive");
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorKind::DegreeMismatch,
                  "generator of degree " + std::to_string(g.degree()) + " in group of degree " + std::to_string(degree));
    }
  }
  auto state = std::make_shared<State>();
  state->degree = degree;
  state->generators = std::move(generators);
  return Group(std::move(state));
}

Group Group::trivial(std::size_t degree) { return from_generators(degree, {}); }

Group Group::from_chain(StabilizerChain chain) {
  auto state = std::make_shared<State>();
  state->degree = chain.degree();
  if (state->degree < 1) throw Error(ErrorKind::EmptyDegree, "group degree must be positive");
  state->generators = chain.input_generators();
  state->chain = std::move(chain);
  std::call_once(state->once, [] {});
  return Group(std::move(state));
}

std::size_t Group::degree() const { return state_->degree; }

const std::vector<Perm>& Group::generators() const { return state_->generators; }

const StabilizerChain& Group::chain() const {
  std::call_once(state_->once, [this] {
    StabilizerChain chain(state_->degree);
    for (const Perm& g : state_->generators) chain.add_generator(g);
    state_->chain = std::move(chain);
  });
  return state_->chain;
}

std::uint64_t Group::order() const { return chain().order(); }

bool Group::contains(const Perm& p) const {
  if (p.degree() != degree()) {
    throw Error(ErrorKind::DegreeMismatch,
                "element of degree " + std::to_string(p.degree()) + " against group of degree " +
                    std::to_string(degree()));
  }
  return chain().contains(p);
}

void Group::for_each_element(const std::function<bool(const Perm&)>& visit, bool bounded) const {
  const StabilizerChain& c = chain();
  if (bounded && c.order() > limits::enumeration_bound()) {
    throw Error(ErrorKind::OrderTooLarge,
                "order " + std::to_string(c.order()) + " exceeds enumeration bound " +
                    std::to_string(limits::enumeration_bound()));
  }
  if (c.depth() == 0) {
    visit(identity());
    return;
  }
  // prefix = x_{k-1} * ... * x_{level+1}
  bool stop = false;
  std::function<void(std::size_t, const Perm&)> walk = [&](std::size_t level, const Perm& prefix) {
    const auto& l = c.level(level);
    for (const Perm& u : l.transversal) {
      if (stop) return;
      Perm next = prefix * u;
      if (level == 0) {
        if (!visit(next)) stop = true;
      } else {
        walk(level - 1, next);
      }
    }
  };
  walk(c.depth() - 1, identity());
}

std::vector<Perm> Group::elements() const {
  std::vector<Perm> out;
  out.reserve(std::min<std::uint64_t>(order(), limits::enumeration_bound()));
  for_each_element([&](const Perm& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<Point> Group::orbit(Point point) const {
  if (point < 1 || point > degree()) throw Error(ErrorKind::PointOutOfRange, "point " + std::to_string(point));
  std::vector<bool> seen(degree(), false);
  std::vector<Point> queue{point - 1};
  seen[point - 1] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Perm& g : generators()) {
      const Point y = g[queue[i]];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  for (Point& x : queue) ++x;
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool Group::is_transitive() const { return orbit(1).size() == degree(); }

StabilizerChain Group::chain_with_base(std::span<const Point> base_prefix) const {
  StabilizerChain c(degree(), base_prefix);
  for (const Perm& g : generators()) c.add_generator(g);
  return c;
}

Group Group::stabilizer(Point point) const {
  if (point < 1 || point > degree()) throw Error(ErrorKind::PointOutOfRange, "point " + std::to_string(point));
  const Point base[] = {point - 1};
  StabilizerChain c = chain_with_base(base);
  GroupBuilder builder(degree());
  if (c.depth() > 1) {
    for (const Perm& s : c.level(1).generators) builder.add(s);
  }
  return std::move(builder).build();
}

bool Group::is_subgroup_of(const Group& other) const {
  if (degree() != other.degree()) return false;
  if (same_object(other)) return true;
  for (const Perm& g : generators()) {
    if (!other.contains(g)) return false;
  }
  return true;
}

bool operator==(const Group& a, const Group& b) {
  if (a.same_object(b)) return true;
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  return a.is_subgroup_of(b);
}

GroupBuilder::GroupBuilder(std::size_t degree, std::span<const Point> base_prefix) : chain_(degree, base_prefix) {
  if (degree < 1) throw Error(ErrorKind::EmptyDegree, "group degree must be positive");
}

bool GroupBuilder::add(const Perm& p) { return chain_.add_generator(p); }

Group GroupBuilder::build() && { return Group::from_chain(std::move(chain_)); }

}  // namespace normlab
