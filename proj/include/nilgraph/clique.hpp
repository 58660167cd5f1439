#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace nilgraph {

/// Undirected simple graph with bit-row adjacency.
class BitGraph {
public:
  BitGraph() = default;
  explicit BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  const std::uint64_t *row(std::size_t u) const { return rows_.data() + u * words_; }
  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;

  static BitGraph complete(std::size_t n);
  static BitGraph cycle(std::size_t n);

private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct CliqueOptions {
  std::uint64_t node_budget = 100'000'000;
};

struct CliqueResult {
  std::size_t size = 0;
  /// Vertex ids, ascending.
  std::vector<std::size_t> vertices;
  bool exact = true;
  std::uint64_t nodes = 0;
  /// Vertices fixed or removed by the complement-graph reductions before branching.
  std::size_t reduced = 0;
};

/// Exact maximum clique.
///
/// Works on the complement first: vertices with no non-neighbours are taken,
/// a vertex with a single non-neighbour is taken and that non-neighbour
/// dropped, and a vertex whose closed complement neighbourhood contains that
/// of a complement neighbour is dropped. What remains is solved by bitset
/// branch and bound with greedy colouring bounds over a degree-descending
/// order (ties by vertex id). If the node budget runs out the best clique
/// found so far is returned with exact = false.
CliqueResult max_clique(const BitGraph &g, const CliqueOptions &options = {});

/// DIMACS "p edge n m" text with 1-indexed "e u v" lines.
std::string to_dimacs(const BitGraph &g);

}  // namespace nilgraph
