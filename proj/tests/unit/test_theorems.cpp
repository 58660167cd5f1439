#include <doctest.h>

#include "nilgraph/error.hpp"
#include "nilgraph/nilpotency.hpp"
#include "nilgraph/theorems.hpp"
#include "oracles.hpp"

using namespace nilgraph;

TEST_CASE("Suzuki closed forms") {
  CHECK(theorem1_formula(8) == 4161);
  CHECK(theorem1_formula(32) == 1049601);
  CHECK(corollary_nilp_suzuki(8) == 4162);
  CHECK(corollary_nilp_suzuki(32) == 1049602);
  // Terms stay integral further up the family.
  for (std::uint64_t q : {128ull, 512ull, 2048ull}) CHECK(corollary_nilp_suzuki(q) == theorem1_formula(q) + 1);
  for (std::uint64_t bad : {0ull, 2ull, 4ull, 16ull, 24ull, 27ull}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(theorem1_formula(bad), InvalidArgument);
  }
}

TEST_CASE("Sylow subgroups and cores") {
  const auto s4 = build("S(4)");
  const auto p2 = sylow_subgroup(*s4, 2);
  CHECK(p2.size() == 8);
  CHECK(is_subgroup(*s4, p2));
  CHECK(normal_core(*s4, p2).size() == 4);
  CHECK(sylow_subgroup(*s4, 3).size() == 3);
  CHECK(normal_core(*s4, sylow_subgroup(*s4, 3)).size() == 1);
  const auto sz = build("Sz(8)");
  CHECK(sylow_subgroup(*sz, 2).size() == 64);
  CHECK(sylow_subgroup(*sz, 13).size() == 13);
}

TEST_CASE("semisimplicity") {
  CHECK(is_semisimple(*build("A(5)")));
  CHECK(is_semisimple(*build("S(5)")));
  CHECK(is_semisimple(*build("A(5)xA(5)")));
  CHECK_FALSE(is_semisimple(*build("S(4)")));
  CHECK_FALSE(is_semisimple(*build("SL(2,5)")));
  CHECK_FALSE(is_semisimple(*build("S(3)xA(5)")));
  CHECK_FALSE(is_semisimple(*build("Q8")));
  CHECK(is_semisimple(*build("S(1)")));
}

TEST_CASE("subgroup enumeration against exhaustive subset search") {
  for (const char *spec : {"S(3)", "Q8", "D(4)", "D(5)", "A(4)"}) {
    CAPTURE(spec);
    const auto g = build(spec);
    const auto subs = all_subgroups(*g);
    CHECK(subs.size() == oracle::subgroup_count(*g));
    for (const auto &s : subs) CHECK(is_subgroup(*g, s));
  }
  CHECK(all_subgroups(*build("S(4)")).size() == 30);
  CHECK(all_subgroups(*build("A(5)")).size() == 59);
  CHECK_THROWS_AS(all_subgroups(*build("S(4)"), 10), ResourceLimit);
}

TEST_CASE("Suzuki partition on Sz(8)") {
  const auto g = build("Sz(8)");
  const auto nilp = nilp_table(*g);
  const auto cent = centralizer_table(*g);
  const auto p = verify_suzuki_partition(*g, 8, nilp, cent);
  CHECK(p.failure == "");
  CHECK(p.order_f == 64);
  CHECK(p.order_a == 7);
  CHECK(p.order_b == 5);
  CHECK(p.order_c == 13);
  CHECK(p.t == 65);
  CHECK(p.s == 2080);
  CHECK(p.k == 560);
  CHECK(p.n == 1456);
  CHECK(p.element_count == 65 * 63 + 2080 * 6 + 560 * 12 + 1456 * 4);
  CHECK(p.partition_valid);
  CHECK(p.centralizer_condition);
  CHECK(p.nilpotentizer_condition);
}

TEST_CASE("report JSON shape and pass logic") {
  VerificationReport r;
  r.suite = "demo";
  r.add(make_claim("a", "ref", 3, Provenance::derived, 3, 0.5));
  r.add(make_claim("b", "ref", Json::array({1, 2}), Provenance::published, Json::array({1, 2})));
  r.out_of_scope.emplace_back("c", "too large");
  CHECK(r.all_pass());
  const Json j = r.to_json();
  CHECK(j["claims"][0]["provenance"] == "derived");
  CHECK(j["claims"][0]["seconds"] == 0.5);
  CHECK(j["claims"][0].contains("paper_ref"));
  CHECK_FALSE(r.to_json(false)["claims"][0].contains("seconds"));
  CHECK(j["out_of_scope"][0]["claim"] == "c");
  r.add(make_claim("d", "ref", 1, Provenance::conjecture, 2));
  CHECK(r.all_pass());  // open conjectures do not block
  r.add(make_claim("e", "ref", 1, Provenance::trivial, 2));
  CHECK_FALSE(r.all_pass());
  CHECK_FALSE(r.to_json()["pass"].get<bool>());
}

TEST_CASE("suites pass on small corpora") {
  CHECK(pgl_suite({4}, {4}).all_pass());
  CHECK(theorem3_classify({"A(5)", "S(5)", "A(6)"}).all_pass());
  const auto props = property_suite({"S(3)", "Q8", "A(5)"});
  for (const auto &c : props.claims) {
    CAPTURE(c.claim);
    CHECK(c.pass);
  }
}
