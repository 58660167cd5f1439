#include <doctest.h>

#include <random>

#include "nilgraph/clique.hpp"
#include "nilgraph/error.hpp"
#include "oracles.hpp"

using namespace nilgraph;

namespace {

BitGraph random_graph(std::size_t n, double p, std::mt19937_64 &rng) {
  std::bernoulli_distribution edge(p);
  BitGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

bool is_clique(const BitGraph &g, const std::vector<std::size_t> &vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("small fixed graphs") {
  CHECK(max_clique(BitGraph::complete(5)).size == 5);
  CHECK(max_clique(BitGraph::cycle(5)).size == 2);
  CHECK(max_clique(BitGraph(7)).size == 1);
  CHECK(max_clique(BitGraph(0)).size == 0);
  CHECK(max_clique(BitGraph::cycle(3)).size == 3);
}

TEST_CASE("graph construction") {
  BitGraph g(70);
  g.add_edge(0, 69);
  g.add_edge(64, 3);
  CHECK(g.adjacent(69, 0));
  CHECK(g.adjacent(3, 64));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(0) == 1);
  CHECK_THROWS_AS(g.add_edge(5, 5), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(5, 70), InvalidArgument);
}

TEST_CASE("random graphs against exhaustive search") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 22;
    const double p = 0.1 + 0.85 * ((trial * 7) % 10) / 10.0;
    const BitGraph g = random_graph(n, p, rng);
    const auto r = max_clique(g);
    CAPTURE(n);
    CAPTURE(p);
    REQUIRE(r.exact);
    REQUIRE(r.size == oracle::clique_number(g));
    REQUIRE(r.vertices.size() == r.size);
    REQUIRE(std::is_sorted(r.vertices.begin(), r.vertices.end()));
    REQUIRE(is_clique(g, r.vertices));
  }
}

TEST_CASE("dense graphs that need branching") {
  // Complements of disjoint odd cycles resist the reductions.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const BitGraph g = random_graph(18 + trial % 5, 0.75, rng);
    const auto r = max_clique(g);
    CHECK(r.size == oracle::clique_number(g));
    CHECK(is_clique(g, r.vertices));
  }
  BitGraph h(15);
  for (std::size_t u = 0; u < 15; ++u) {
    for (std::size_t v = u + 1; v < 15; ++v) {
      if (u / 5 != v / 5 || (v - u != 1 && v - u != 4)) h.add_edge(u, v);
    }
  }
  const auto r = max_clique(h);
  CHECK(r.size == 6);  // two from each complemented 5-cycle
  CHECK(r.nodes > 0);
}

TEST_CASE("witness is deterministic") {
  std::mt19937_64 rng(99);
  const BitGraph g = random_graph(60, 0.6, rng);
  const auto a = max_clique(g);
  const auto b = max_clique(g);
  CHECK(a.vertices == b.vertices);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("node budget exhaustion is reported as inexact") {
  std::mt19937_64 rng(3);
  const BitGraph g = random_graph(150, 0.9, rng);
  CliqueOptions tiny;
  tiny.node_budget = 5;
  const auto r = max_clique(g, tiny);
  CHECK_FALSE(r.exact);
  CHECK(r.size > 0);
  CHECK(is_clique(g, r.vertices));
  CHECK(r.size <= max_clique(g).size);
}

TEST_CASE("DIMACS output") {
  BitGraph g(3);
  g.add_edge(0, 2);
  CHECK(to_dimacs(g) == "p edge 3 1\ne 1 3\n");
  CHECK(to_dimacs(BitGraph::complete(4)).rfind("p edge 4 6\n", 0) == 0);
}
