#include <doctest.h>

#include <filesystem>
#include <set>

#include "nilgraph/cache.hpp"
#include "nilgraph/constructors.hpp"
#include "nilgraph/error.hpp"
#include "oracles.hpp"

using namespace nilgraph;

namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::uint64_t gl2(std::uint64_t q) { return (q * q - 1) * (q * q - q); }

std::size_t brute_class_count(const Group &g) {
  std::vector<char> seen(g.order(), 0);
  std::size_t classes = 0;
  for (Index x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++classes;
    for (Index h = 0; h < g.order(); ++h) seen[g.mul(g.mul(oracle::inverse(g, h), x), h)] = 1;
  }
  return classes;
}

}  // namespace

TEST_CASE("family orders match closed forms") {
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(build("S(" + std::to_string(n) + ")")->order() == factorial(n));
  }
  for (unsigned n = 3; n <= 6; ++n) {
    CHECK(build("A(" + std::to_string(n) + ")")->order() == factorial(n) / 2);
  }
  CHECK(build("D(5)")->order() == 10);
  CHECK(build("Q8")->order() == 8);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const std::string s = std::to_string(q);
    CHECK(build("GL(2," + s + ")")->order() == gl2(q));
    CHECK(build("SL(2," + s + ")")->order() == gl2(q) / (q - 1));
    CHECK(build("PGL(2," + s + ")")->order() == gl2(q) / (q - 1));
    CHECK(build("PSL(2," + s + ")")->order() == gl2(q) / (q - 1) / (q % 2 ? 2 : 1));
  }
  CHECK(build("PSL(3,3)")->order() == 5616);
  CHECK(build("Sz(8)")->order() == 29120);
  CHECK(build("S(3)xA(5)")->order() == 360);
}

TEST_CASE("spec parsing") {
  CHECK(GroupSpec::parse(" PGL( 2 , 7 ) ").to_string() == "PGL(2,7)");
  CHECK(GroupSpec::parse("S(3)xS(3)").factors.size() == 2);
  CHECK(GroupSpec::parse("S(3)xS(3)").predicted_order() == 36);
  for (const char *bad : {"B(5)", "PSL(2,6)", "Sz(16)", "Sz(2)", "S(3)x", "GL(2,7", "", "A(x)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(GroupSpec::parse(bad), InvalidArgument);
  }
}

TEST_CASE("element cap is enforced") {
  CHECK_THROWS_AS(build("S(11)"), ResourceLimit);
  ClosureOptions small;
  small.element_cap = 100;
  CHECK_THROWS_AS(build("S(5)", small), ResourceLimit);
}

TEST_CASE("permutation product applies the left factor first") {
  const auto c = std::make_shared<PermutationCarrier>(3);
  const auto g = Group::closure(c, {c->from_cycles({{0, 1}}), c->from_cycles({{0, 1, 2}})});
  const Index a = g->index_of(c->from_cycles({{0, 1}}));
  const Index b = g->index_of(c->from_cycles({{0, 1, 2}}));
  const auto ab = g->element(g->mul(a, b));
  CHECK(ab.words[0] == 2);
  CHECK(ab.words[1] == 1);
  CHECK(ab.words[2] == 0);
  CHECK_THROWS_AS(c->from_cycles({{0, 0}}), InvalidArgument);
}

TEST_CASE("multiplication table, inverses and orders are consistent") {
  for (const char *spec : {"S(4)", "GL(2,3)", "PSL(2,7)", "S(3)xS(3)", "Q8"}) {
    CAPTURE(spec);
    const auto g = build(spec);
    for (Index x = 0; x < g->order(); ++x) {
      CHECK(g->mul(x, g->inv(x)) == 0);
      CHECK(g->pow(x, g->element_order(x)) == 0);
      for (Index y = 0; y < g->order(); y += 7) {
        for (Index z = 0; z < g->order(); z += 5) {
          CHECK(g->mul(g->mul(x, y), z) == g->mul(x, g->mul(y, z)));
        }
      }
    }
  }
}

TEST_CASE("conjugacy classes against brute force") {
  for (const char *spec : {"S(3)", "S(4)", "S(5)", "A(5)", "Q8", "D(4)", "GL(2,3)", "PSL(2,7)"}) {
    CAPTURE(spec);
    const auto g = build(spec);
    const auto &cl = g->classes();
    CHECK(cl.count() == brute_class_count(*g));
    // The conjugation tree reproduces every member from its representative.
    for (Index x = 0; x < g->order(); ++x) {
      if (cl.parent[x] == x) continue;
      CHECK(g->conj(cl.parent[x], g->generators()[cl.via[x]]) == x);
      CHECK(cl.class_of[cl.parent[x]] == cl.class_of[x]);
    }
  }
  CHECK(build("PSL(3,3)")->classes().count() == 12);
  CHECK(build("Sz(8)")->classes().count() == 11);
}

TEST_CASE("structural queries") {
  const auto s4 = build("S(4)");
  auto c = std::static_pointer_cast<const PermutationCarrier>(s4->carrier_ptr());
  CHECK(centralizer(*s4, c->from_cycles({{0, 1}})).size() == 4);
  CHECK(center(*s4).size() == 1);
  CHECK(center(*build("Q8")).size() == 2);
  CHECK(center(*build("GL(2,5)")).size() == 4);
  CHECK(is_abelian(*build("Q8"), center(*build("Q8"))));
  CHECK_FALSE(is_abelian(*s4, s4->all()));

  ElementSet notsub(s4->order());
  notsub.insert(0);
  notsub.insert(s4->index_of(c->from_cycles({{0, 1}})));
  notsub.insert(s4->index_of(c->from_cycles({{1, 2}})));
  CHECK_FALSE(is_subgroup(*s4, notsub));
  CHECK_THROWS_AS(generating_set(*s4, notsub), InvalidArgument);
  CHECK_THROWS_AS(is_subgroup(*s4, s4->empty_set()), InvalidArgument);

  const auto v4 = s4->generate({s4->index_of(c->from_cycles({{0, 1}, {2, 3}})),
                                s4->index_of(c->from_cycles({{0, 2}, {1, 3}}))});
  CHECK(v4.size() == 4);
  CHECK(is_normal_subgroup(*s4, v4));
  const auto q = quotient_by_normal(s4, v4);
  CHECK(q->order() == 6);
  CHECK(class_fingerprint(*q) == class_fingerprint(*build("S(3)")));
  CHECK_THROWS_AS(quotient_by_normal(s4, notsub), InvalidArgument);
}

TEST_CASE("subgroup re-enumeration and direct products") {
  const auto s5 = build("S(5)");
  const auto sub = s5->subgroup(s5->generate({s5->generators()[0]}));
  CHECK(sub->order() == 2);
  const auto p = direct_product(build("S(3)"), build("Q8"));
  CHECK(p->order() == 48);
  CHECK(p->classes().count() == 15);
  CHECK(center(*p).size() == 2);
}

TEST_CASE("quotient of SL(2,5) by its centre looks like A5") {
  const auto g = build("SL(2,5)");
  const auto q = quotient_by_normal(g, center(*g));
  CHECK(q->order() == 60);
  CHECK(class_fingerprint(*q) == class_fingerprint(*build("A(5)")));
}

TEST_CASE("permutation models of matrix groups are faithful and index-preserving") {
  const auto l27 = build("PSL(2,7)");
  const auto m = permutation_model(l27, {1, 0});
  CHECK(m.faithful);
  CHECK(m.orbit.size() == 8);
  CHECK(m.group->order() == 168);

  const auto sz = build("Sz(8)");
  const auto ms = permutation_model(sz, {1, 0, 0, 0});
  CHECK(ms.orbit.size() == 65);
  CHECK(ms.group->order() == 29120);
  CHECK(class_fingerprint(*ms.group) == class_fingerprint(*sz));
}

TEST_CASE("Suzuki generators lie in Sp(4,q) shape and have the expected orders") {
  const auto gens = suzuki_generators(SuzukiParams::from_q(8));
  const auto g = Group::closure(gens.carrier, gens.all());
  CHECK(g->order() == 29120);
  CHECK(element_order(*g, gens.torus) == 7);
  CHECK(element_order(*g, gens.involution) == 2);
  for (const auto &u : gens.unipotent) CHECK(element_order(*g, u) == 4);
  CHECK_THROWS_AS(SuzukiParams::from_q(16), InvalidArgument);
}

TEST_CASE("cache round trip reproduces the enumeration") {
  const auto dir = std::filesystem::temp_directory_path() / "nilgraph-test-cache";
  std::filesystem::remove_all(dir);
  const auto cold = build("PSL(2,7)", {}, dir.string());
  CHECK(std::filesystem::exists(dir));
  const auto warm = build("PSL(2,7)", {}, dir.string());
  CHECK(warm->data() == cold->data());
  CHECK(warm->generators() == cold->generators());
  CHECK(warm->label == cold->label);
  const auto plain = build("PSL(2,7)");
  CHECK(plain->data() == cold->data());

  // A corrupted file is ignored, not trusted.
  GroupCache cache(dir.string());
  const auto path = cache.path_for(cold->label, cold->carrier());
  std::filesystem::resize_file(path, 40);
  CHECK(build("PSL(2,7)", {}, dir.string())->data() == cold->data());
  std::filesystem::remove_all(dir);
}
