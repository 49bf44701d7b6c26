#pragma once

// Exhaustive reference implementations used only by the tests. Everything
// here works on explicit element sets built by closing the generators under
// multiplication; no stabilizer chain, no backtrack, no element index.

#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "normlab/group.hpp"
#include "normlab/subgroup.hpp"

namespace oracle {

using P = std::vector<std::uint32_t>;  // 0-based images
using Set = std::set<P>;

inline P identity(std::size_t n) {
  P p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

// Left to right: apply a, then b.
inline P mul(const P& a, const P& b) {
  P r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline P inv(const P& a) {
  P r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline P conj(const P& x, const P& g) { return mul(mul(inv(g), x), g); }

inline P from(const normlab::Perm& p) {
  P r;
  for (std::uint32_t x : p.images()) r.push_back(x - 1);
  return r;
}

inline normlab::Perm to(const P& p) { return normlab::Perm::from_raw(p); }

inline std::uint64_t element_order(const P& p) {
  const P e = identity(p.size());
  P x = p;
  std::uint64_t k = 1;
  while (x != e) {
    x = mul(x, p);
    ++k;
  }
  return k;
}

template <typename Range>
Set closure(std::size_t n, const Range& gens) {
  Set out{identity(n)};
  std::deque<P> todo{identity(n)};
  while (!todo.empty()) {
    const P x = todo.front();
    todo.pop_front();
    for (const P& g : gens) {
      P y = mul(x, g);
      if (out.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return out;
}

inline std::vector<P> gens_of(const normlab::Group& g) {
  std::vector<P> out;
  for (const normlab::Perm& p : g.generators()) out.push_back(from(p));
  return out;
}

inline Set elements(const normlab::Group& g) { return closure(g.degree(), gens_of(g)); }

inline Set intersect(const Set& a, const Set& b) {
  Set out;
  for (const P& x : a) {
    if (b.contains(x)) out.insert(x);
  }
  return out;
}

inline bool subset(const Set& a, const Set& b) {
  for (const P& x : a) {
    if (!b.contains(x)) return false;
  }
  return true;
}

inline Set centralizer(const Set& g, const Set& a) {
  Set out;
  for (const P& x : g) {
    bool ok = true;
    for (const P& y : a) {
      if (mul(x, y) != mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

inline Set normalizer(const Set& g, const Set& h) {
  Set out;
  for (const P& x : g) {
    bool ok = true;
    for (const P& y : h) {
      if (!h.contains(conj(y, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

inline bool is_normal(const Set& g, const Set& h) { return normalizer(g, h).size() == g.size(); }

inline Set conjugate(const Set& h, const P& x) {
  Set out;
  for (const P& y : h) out.insert(conj(y, x));
  return out;
}

inline Set core(const Set& g, const Set& h) {
  Set out = h;
  for (const P& x : g) out = intersect(out, conjugate(h, x));
  return out;
}

inline Set commutator_subgroup(std::size_t n, const Set& a, const Set& b) {
  std::set<P> comms;
  for (const P& x : a) {
    for (const P& y : b) comms.insert(mul(mul(inv(x), inv(y)), mul(x, y)));
  }
  return closure(n, comms);
}

inline bool solvable(std::size_t n, Set g) {
  while (g.size() > 1) {
    Set d = commutator_subgroup(n, g, g);
    if (d.size() == g.size()) return false;
    g = std::move(d);
  }
  return true;
}

inline bool nilpotent(std::size_t n, const Set& g) {
  Set term = g;
  while (term.size() > 1) {
    Set next = commutator_subgroup(n, term, g);
    if (next.size() == term.size()) return false;
    term = std::move(next);
  }
  return true;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

// Every subgroup is a join of cyclic subgroups, so joining until nothing
// new appears reaches the full lattice.
inline std::vector<Set> all_subgroups(std::size_t n, const Set& g) {
  std::set<Set> found;
  for (const P& x : g) found.insert(closure(n, std::vector<P>{x}));
  std::vector<Set> cyclic(found.begin(), found.end());
  std::vector<Set> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const Set& a : frontier) {
      for (const Set& c : cyclic) {
        if (subset(c, a)) continue;
        std::vector<P> gens(a.begin(), a.end());
        gens.insert(gens.end(), c.begin(), c.end());
        Set j = closure(n, gens);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

inline Set to_set(const normlab::Subgroup& h) { return elements(h.group()); }

}  // namespace oracle
