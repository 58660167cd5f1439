#include "nilgraph/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "nilgraph/error.hpp"

namespace nilgraph {

void BitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw InvalidArgument("vertex out of range");
  if (u == v) throw InvalidArgument("self-loops are not allowed");
  rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::size_t BitGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[u * words_ + w]);
  return d;
}

std::size_t BitGraph::edge_count() const {
  std::size_t m = 0;
  for (std::size_t u = 0; u < n_; ++u) m += degree(u);
  return m / 2;
}

BitGraph BitGraph::complete(std::size_t n) {
  BitGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

BitGraph BitGraph::cycle(std::size_t n) {
  BitGraph g(n);
  for (std::size_t u = 0; n >= 3 && u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits &b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t count(const Bits &b) {
  std::size_t c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}

class BranchAndBound {
public:
  BranchAndBound(const BitGraph &g, std::uint64_t budget) : g_(g), budget_(budget) {}

  // Returns a maximum clique of g (vertex ids of g), or the best found on budget exhaustion.
  std::vector<std::size_t> solve() {
    const std::size_t n = g_.size();
    if (n == 0) return {};
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g_.degree(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    words_ = (n + 63) / 64;
    adj_.assign(n * words_, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && g_.adjacent(order_[i], order_[j])) adj_[i * words_ + (j >> 6)] |= 1ull << (j & 63);
      }
    }
    // Greedy seed in branching order.
    for (std::size_t i = 0; i < n; ++i) {
      bool ok = true;
      for (std::size_t c : best_) ok = ok && bit(i, c);
      if (ok) best_.push_back(i);
    }
    Bits p(words_, 0);
    for (std::size_t i = 0; i < n; ++i) p[i >> 6] |= 1ull << (i & 63);
    expand(p);
    std::vector<std::size_t> out;
    for (std::size_t i : best_) out.push_back(order_[i]);
    return out;
  }

  bool exact() const { return !aborted_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  bool bit(std::size_t u, std::size_t v) const {
    return (adj_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  void expand(Bits &p) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    Bits u = p;
    std::size_t k = 0;
    Bits q(words_);
    while (any(u)) {
      ++k;
      q = u;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          const std::size_t v = w * 64 + std::countr_zero(q[w]);
          q[w] &= q[w] - 1;
          u[v >> 6] &= ~(1ull << (v & 63));
          const std::uint64_t *row = adj_.data() + v * words_;
          for (std::size_t x = w; x < words_; ++x) q[x] &= ~row[x];
          verts.push_back(v);
          colors.push_back(k);
        }
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current_.size() + colors[i] <= best_.size()) return;
      const std::size_t v = verts[i];
      current_.push_back(v);
      Bits np(words_);
      const std::uint64_t *row = adj_.data() + v * words_;
      for (std::size_t w = 0; w < words_; ++w) np[w] = p[w] & row[w];
      if (!any(np)) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(np);
      }
      current_.pop_back();
      p[v >> 6] &= ~(1ull << (v & 63));
      if (aborted_) return;
    }
  }

  const BitGraph &g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t words_ = 0;
  std::vector<std::size_t> order_;
  Bits adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

CliqueResult max_clique(const BitGraph &g, const CliqueOptions &options) {
  const std::size_t n = g.size();
  const std::size_t words = g.words();
  Bits alive(words, 0);
  for (std::size_t v = 0; v < n; ++v) alive[v >> 6] |= 1ull << (v & 63);
  auto is_alive = [&](std::size_t v) { return (alive[v >> 6] >> (v & 63)) & 1u; };
  auto kill = [&](std::size_t v) { alive[v >> 6] &= ~(1ull << (v & 63)); };
  // Alive vertices not adjacent to v, v excluded.
  auto non_neighbours = [&](std::size_t v) {
    Bits out(words);
    const std::uint64_t *row = g.row(v);
    for (std::size_t w = 0; w < words; ++w) out[w] = alive[w] & ~row[w];
    out[v >> 6] &= ~(1ull << (v & 63));
    return out;
  };

  std::vector<std::size_t> taken;
  std::size_t removed = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!is_alive(v)) continue;
      const Bits nn = non_neighbours(v);
      const std::size_t d = count(nn);
      if (d == 0) {
        taken.push_back(v);
        kill(v);
        changed = true;
      } else if (d == 1) {
        std::size_t u = 0;
        for (std::size_t w = 0; w < words; ++w) {
          if (nn[w]) u = w * 64 + std::countr_zero(nn[w]);
        }
        taken.push_back(v);
        kill(v);
        kill(u);
        ++removed;
        changed = true;
      }
    }
    if (changed) continue;
    // u and v non-adjacent with N(u) within N(v) (restricted to alive): u is never needed.
    for (std::size_t u = 0; u < n && !changed; ++u) {
      if (!is_alive(u)) continue;
      const Bits nn = non_neighbours(u);
      const std::uint64_t *ru = g.row(u);
      for (std::size_t w = 0; w < words && !changed; ++w) {
        for (std::uint64_t bits = nn[w]; bits && !changed; bits &= bits - 1) {
          const std::size_t v = w * 64 + std::countr_zero(bits);
          const std::uint64_t *rv = g.row(v);
          bool dominated = true;
          for (std::size_t x = 0; x < words && dominated; ++x) {
            dominated = ((ru[x] & alive[x]) & ~rv[x]) == 0;
          }
          if (dominated) {
            kill(u);
            ++removed;
            changed = true;
          }
        }
      }
    }
  }

  std::vector<std::size_t> kernel;
  for (std::size_t v = 0; v < n; ++v) {
    if (is_alive(v)) kernel.push_back(v);
  }
  BitGraph k(kernel.size());
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    for (std::size_t j = i + 1; j < kernel.size(); ++j) {
      if (g.adjacent(kernel[i], kernel[j])) k.add_edge(i, j);
    }
  }
  BranchAndBound bb(k, options.node_budget);
  CliqueResult result;
  for (std::size_t i : bb.solve()) taken.push_back(kernel[i]);
  std::sort(taken.begin(), taken.end());
  result.vertices = std::move(taken);
  result.size = result.vertices.size();
  result.exact = bb.exact();
  result.nodes = bb.nodes();
  result.reduced = n - kernel.size();
  return result;
}

std::string to_dimacs(const BitGraph &g) {
  std::ostringstream os;
  os << "p edge " << g.size() << " " << g.edge_count() << "\n";
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) os << "e " << u + 1 << " " << v + 1 << "\n";
    }
  }
  return os.str();
}

}  // namespace nilgraph
