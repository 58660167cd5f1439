#include <doctest.h>

#include "nilgraph/constructors.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/nilgraph.hpp"
#include "nilgraph/nilpotency.hpp"
#include "oracles.hpp"

using namespace nilgraph;

namespace {

BitGraph brute_graph(const Group &g, Relation rel) {
  BitGraph out(g.order());
  for (Index a = 0; a < g.order(); ++a) {
    for (Index b = a + 1; b < g.order(); ++b) {
      const bool joined = rel == Relation::nilpotent ? !oracle::pair_nilpotent(g, a, b)
                                                     : g.mul(a, b) != g.mul(b, a);
      if (joined) out.add_edge(a, b);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("table entries match the brute-force nilpotentizer of every element") {
  for (const char *spec : {"S(3)", "S(4)", "D(4)", "Q8", "A(4)", "GL(2,3)", "A(5)"}) {
    CAPTURE(spec);
    const auto g = build(spec);
    const auto t = nilp_table(*g);
    std::size_t members = 0;
    for (const auto &e : t.entries) {
      members += e.member_count;
      CHECK(e.set.contains(0));
      CHECK(e.set.contains(e.representative));
      CHECK(t.entry_of[e.representative] < t.size());
    }
    CHECK(members == g->order());
    CHECK(t.entries[0].set.size() == g->order());
    for (Index x = 0; x < g->order(); ++x) {
      const auto expect = oracle::nilpotentizer(*g, x);
      REQUIRE(t.of(x) == ElementSet::of(g->order(), expect));
      REQUIRE(nilpotentizer(*g, x) == t.of(x));
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) CHECK_FALSE(t.entries[i].set == t.entries[j].set);
    }
  }
}

TEST_CASE("table flags") {
  const auto g = build("S(4)");
  const auto t = nilp_table(*g);
  for (const auto &e : t.entries) {
    CHECK(e.is_subgroup == is_subgroup(*g, e.set));
    CHECK(e.is_nilpotent_subgroup == (e.is_subgroup && is_nilpotent(*g, e.set)));
  }
}

TEST_CASE("nilpotentizer sizes and counts") {
  CHECK(nilp_table(*build("S(3)")).size() == 5);
  CHECK(nilp_table(*build("A(5)")).size() == 22);
  CHECK(nilp_table(*build("S(3)xS(3)")).size() == 25);
  CHECK(nilp_table(*build("Q8")).size() == 1);
  const auto s3 = build("S(3)");
  auto c = std::static_pointer_cast<const PermutationCarrier>(s3->carrier_ptr());
  CHECK(nilpotentizer(*s3, c->from_cycles({{0, 1}})).size() == 2);
  CHECK(nil_of_group(nilp_table(*s3)).size() == 1);
  CHECK(nil_of_group(nilp_table(*build("D(4)"))).size() == 8);
}

TEST_CASE("the S4 double transposition has a non-subgroup nilpotentizer") {
  const auto g = build("S(4)");
  auto c = std::static_pointer_cast<const PermutationCarrier>(g->carrier_ptr());
  const auto n = nilpotentizer(*g, c->from_cycles({{0, 2}, {1, 3}}));
  CHECK(n.size() == 16);
  CHECK_FALSE(is_subgroup(*g, n));
}

TEST_CASE("parallel table equals serial table") {
  for (const char *spec : {"PSL(2,7)", "S(3)xA(5)"}) {
    const auto g = build(spec);
    NilgraphOptions par;
    par.jobs = 4;
    const auto a = nilp_table(*g), b = nilp_table(*g, par);
    CHECK(a.entry_of == b.entry_of);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.entries[i].set == b.entries[i].set);
  }
}

TEST_CASE("quotient graphs") {
  const auto s3 = nilp_table(*build("S(3)"));
  const auto q = quotient_graph(s3);
  CHECK(q.graph.size() == 4);
  CHECK(q.graph.edge_count() == 6);
  const auto a5 = quotient_graph(nilp_table(*build("A(5)")));
  CHECK(a5.graph.size() == 21);
  CHECK(a5.graph.edge_count() == 210);
  CHECK(quotient_graph(nilp_table(*build("Q8"))).graph.size() == 0);
}

TEST_CASE("omega against exhaustive clique search on the full graph") {
  for (const char *spec : {"S(3)", "D(5)", "A(4)", "D(6)"}) {
    CAPTURE(spec);
    const auto g = build(spec);
    CHECK(omega(*g).omega == oracle::clique_number(brute_graph(*g, Relation::nilpotent)));
    CHECK(omega_noncommuting(*g).omega ==
          oracle::clique_number(brute_graph(*g, Relation::commuting)));
  }
}

TEST_CASE("omega on larger groups against exact search on the full graph") {
  for (const char *spec : {"S(4)", "GL(2,3)", "A(5)", "SL(2,5)"}) {
    CAPTURE(spec);
    const auto g = build(spec);
    const auto t = nilp_table(*g);
    const auto full = max_clique(full_graph(t));
    REQUIRE(full.exact);
    CHECK(omega(*g, t).omega == full.size);
  }
}

TEST_CASE("omega values and witnesses") {
  const auto s3 = omega(*build("S(3)"));
  CHECK(s3.omega == 4);
  CHECK(s3.method == OmegaMethod::fast_path);
  const auto a5 = build("A(5)");
  const auto r = omega(*a5);
  CHECK(r.omega == 21);
  CHECK(r.witness.size() == 21);
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    for (std::size_t j = i + 1; j < r.witness.size(); ++j) {
      CHECK_FALSE(oracle::pair_nilpotent(*a5, r.witness[i], r.witness[j]));
    }
  }
  CHECK(omega(*build("PSL(2,7)")).omega == 57);
  CHECK(omega(*build("S(3)xS(3)")).omega == 16);
  CHECK(omega(*build("S(4)")).method == OmegaMethod::clique_search);
}

TEST_CASE("conventions for groups without edges") {
  const auto q8 = omega(*build("Q8"));
  CHECK(q8.omega == 1);
  CHECK(q8.method == OmegaMethod::weakly_nilpotent);
  const auto one = omega(*build("S(1)"));
  CHECK(one.omega == 0);
  CHECK(one.method == OmegaMethod::trivial_group);
}

TEST_CASE("noncommuting graph") {
  CHECK(omega_noncommuting(*build("S(3)")).omega == 4);
  CHECK(omega_noncommuting(*build("A(5)")).omega == 21);
  for (const char *spec : {"S(4)", "GL(2,3)", "PSL(2,7)", "S(3)xS(3)"}) {
    const auto g = build(spec);
    CHECK(omega_noncommuting(*g).omega >= omega(*g).omega);
  }
}

TEST_CASE("AC-groups against brute-force centralizers") {
  for (const char *spec : {"Q8", "S(3)", "S(4)", "A(4)", "A(5)", "D(4)", "GL(2,3)", "PSL(2,7)"}) {
    CAPTURE(spec);
    const auto g = build(spec);
    bool ac = true;
    for (Index x = 0; x < g->order(); ++x) {
      std::vector<Index> c;
      for (Index y = 0; y < g->order(); ++y) {
        if (g->mul(x, y) == g->mul(y, x)) c.push_back(y);
      }
      if (c.size() == g->order()) continue;
      for (Index a : c) {
        for (Index b : c) ac = ac && g->mul(a, b) == g->mul(b, a);
      }
    }
    CHECK(is_ac_group(*g) == ac);
  }
  CHECK(is_ac_group(*build("A(5)")));
}

TEST_CASE("graph export") {
  CHECK(export_dimacs(quotient_graph(nilp_table(*build("S(3)"))).graph) ==
        "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
  CHECK(export_dimacs(full_graph(nilp_table(*build("Q8")))) == "p edge 0 0\n");
  const auto s3 = build("S(3)");
  const auto full = full_graph(centralizer_table(*s3));
  CHECK(full.size() == 6);
  CHECK(full.degree(0) == 0);
  CHECK(full.edge_count() == brute_graph(*s3, Relation::commuting).edge_count());
  const std::string json = table_json(nilp_table(*s3));
  CHECK(json.find("\"member_count\"") != std::string::npos);
}

TEST_CASE("budget exhaustion surfaces as SearchTimeout") {
  // A group whose quotient graph needs branching is not in the corpus, so
  // exercise the error type directly.
  const SearchTimeout e("budget", 7, {1, 2, 3});
  CHECK(e.lower_bound == 7);
  CHECK(e.witness.size() == 3);
  const ResourceLimit &base = e;
  CHECK(std::string(base.what()) == "budget");
}
