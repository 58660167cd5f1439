#include <doctest.h>

#include "nilgraph/constructors.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/nilpotency.hpp"
#include "nilgraph/theorems.hpp"
#include "oracles.hpp"

using namespace nilgraph;

TEST_CASE("factorize") {
  using F = std::vector<std::pair<std::uint64_t, unsigned>>;
  CHECK(factorize(1).empty());
  CHECK(factorize(29120) == F{{2, 6}, {5, 1}, {7, 1}, {13, 1}});
  CHECK(factorize(97) == F{{97, 1}});
}

TEST_CASE("two-generator nilpotency against the upper central series oracle") {
  for (const char *spec : {"S(3)", "S(4)", "D(4)", "Q8", "A(4)", "GL(2,3)", "D(6)"}) {
    CAPTURE(spec);
    const auto g = build(spec);
    for (Index a = 0; a < g->order(); ++a) {
      for (Index b = 0; b < g->order(); ++b) {
        REQUIRE(two_gen_nilpotent(*g, a, b) == oracle::pair_nilpotent(*g, a, b));
      }
    }
  }
}

TEST_CASE("two-generator nilpotency, sampled on larger groups") {
  for (const char *spec : {"A(5)", "PSL(2,7)", "S(3)xS(3)"}) {
    CAPTURE(spec);
    const auto g = build(spec);
    for (Index a = 0; a < g->order(); a += 3) {
      for (Index b = 0; b < g->order(); b += 5) {
        REQUIRE(two_gen_nilpotent(*g, a, b) == oracle::pair_nilpotent(*g, a, b));
      }
    }
  }
  CHECK_THROWS_AS(two_gen_nilpotent(*build("S(3)"), 0, 99), InvalidArgument);
}

TEST_CASE("subgroup nilpotency tests agree on every subgroup") {
  for (const char *spec : {"S(4)", "GL(2,3)", "D(6)"}) {
    CAPTURE(spec);
    const auto g = build(spec);
    for (const auto &h : all_subgroups(*g)) {
      const auto members = h.indices();
      const bool expect = oracle::nilpotent(*g, std::vector<Index>(members.begin(), members.end()));
      CHECK(is_nilpotent(*g, h) == expect);
      CHECK(is_nilpotent_by_lower_central_series(*g, h) == expect);
    }
  }
}

TEST_CASE("whole-group nilpotency and solvability") {
  CHECK(is_nilpotent(*build("Q8"), build("Q8")->all()));
  CHECK(is_nilpotent(*build("D(8)"), build("D(8)")->all()));
  CHECK_FALSE(is_nilpotent(*build("S(3)"), build("S(3)")->all()));
  CHECK(is_solvable(*build("S(4)"), build("S(4)")->all()));
  CHECK(is_solvable(*build("GL(2,3)"), build("GL(2,3)")->all()));
  CHECK_FALSE(is_solvable(*build("A(5)"), build("A(5)")->all()));
  CHECK_FALSE(is_solvable(*build("S(3)xA(5)"), build("S(3)xA(5)")->all()));
  const auto s4 = build("S(4)");
  CHECK(derived_series(*s4, s4->all()).size() == 4);  // S4 > A4 > V4 > 1
}

TEST_CASE("lower central series of S4 stops at A4") {
  const auto g = build("S(4)");
  const auto lcs = lower_central_series(*g, g->all());
  CHECK(lcs.stabilized);
  CHECK(lcs.terms.size() == 2);
  CHECK(lcs.last().size() == 12);
}

TEST_CASE("hypercenter") {
  CHECK(hypercenter(*build("Q8")).last().size() == 8);
  CHECK(hypercenter(*build("S(3)")).last().size() == 1);
  CHECK(hypercenter(*build("SL(2,5)")).last().size() == 2);
  CHECK(hypercenter(*build("GL(2,3)")).last().size() == 2);
  CHECK(hypercenter(*build("S(3)xQ8")).last().size() == 8);
  const auto d8 = hypercenter(*build("D(8)"));
  CHECK(d8.terms.size() == 4);  // 1 < Z(D16) < ... < D16
  CHECK(d8.last().size() == 16);
}

TEST_CASE("right Engel elements coincide with the hypercenter") {
  for (const char *spec : {"S(3)", "S(4)", "Q8", "D(4)", "GL(2,3)", "SL(2,5)", "S(3)xQ8"}) {
    CAPTURE(spec);
    const auto g = build(spec);
    const auto r1 = right_engel_set(*g);
    const auto r2 = right_engel_set(*g, std::nullopt, 3);
    CHECK(r1.exact);
    CHECK(r1.right_engel == hypercenter(*g).last());
    CHECK(r2.right_engel == r1.right_engel);
    CHECK(r2.max_depth_used == r1.max_depth_used);
  }
  // A depth cap of zero cannot settle any nontrivial walk.
  CHECK_FALSE(right_engel_set(*build("S(3)"), 0).exact);
}

TEST_CASE("p-elements and normal closures") {
  const auto g = build("S(4)");
  CHECK(p_elements(*g, g->all(), 3).size() == 9);
  CHECK(p_elements(*g, g->all(), 2).size() == 16);
  auto c = std::static_pointer_cast<const PermutationCarrier>(g->carrier_ptr());
  const Index t = g->index_of(c->from_cycles({{0, 1}}));
  CHECK(normal_closure(*g, g->generators(), {t}).size() == 24);
  const Index dt = g->index_of(c->from_cycles({{0, 1}, {2, 3}}));
  CHECK(normal_closure(*g, g->generators(), {dt}).size() == 4);
}
