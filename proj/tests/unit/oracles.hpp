#pragma once

// Brute-force reference implementations. They use only the group's
// multiplication and share no code with the library routines under test.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "nilgraph/clique.hpp"
#include "nilgraph/group.hpp"

namespace oracle {

using nilgraph::Group;
using nilgraph::Index;

inline std::vector<Index> closure(const Group &g, const std::vector<Index> &gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Index> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Index s : gens) {
      const Index z = g.mul(out[i], s);
      if (!in[z]) {
        in[z] = 1;
        out.push_back(z);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Index inverse(const Group &g, Index x) {
  for (Index y = 0; y < g.order(); ++y) {
    if (g.mul(x, y) == 0) return y;
  }
  return 0;
}

/// Nilpotency by the upper central series computed inside the subgroup h.
inline bool nilpotent(const Group &g, const std::vector<Index> &h) {
  std::vector<Index> inv(g.order());
  for (Index x : h) inv[x] = inverse(g, x);
  std::vector<char> z(g.order(), 0);
  z[0] = 1;
  std::size_t zsize = 1;
  while (true) {
    std::vector<char> next = z;
    std::size_t nsize = 0;
    for (Index x : h) {
      bool central = true;
      for (Index y : h) {
        const Index c = g.mul(g.mul(inv[x], inv[y]), g.mul(x, y));
        if (!z[c]) {
          central = false;
          break;
        }
      }
      next[x] = central;
      nsize += central;
    }
    if (nsize == h.size()) return true;
    if (nsize == zsize) return false;
    z = std::move(next);
    zsize = nsize;
  }
}

inline bool pair_nilpotent(const Group &g, Index a, Index b) { return nilpotent(g, closure(g, {a, b})); }

inline std::vector<Index> nilpotentizer(const Group &g, Index x) {
  std::vector<Index> out;
  for (Index y = 0; y < g.order(); ++y) {
    if (pair_nilpotent(g, x, y)) out.push_back(y);
  }
  return out;
}

/// Exhaustive maximum clique size for graphs with at most ~24 vertices.
inline std::size_t clique_number(const nilgraph::BitGraph &g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  std::vector<std::size_t> cur;
  auto rec = [&](auto &&self, std::size_t from) -> void {
    best = std::max(best, cur.size());
    for (std::size_t v = from; v < n; ++v) {
      bool ok = true;
      for (std::size_t u : cur) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

/// Every subset of the group that is closed under multiplication (tiny groups only).
inline std::size_t subgroup_count(const Group &g) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    bool closed = true;
    for (Index a = 0; a < n && closed; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (Index b = 0; b < n && closed; ++b) {
        if ((mask >> b) & 1) closed = (mask >> g.mul(a, b)) & 1;
      }
    }
    count += closed;
  }
  return count;
}

}  // namespace oracle
