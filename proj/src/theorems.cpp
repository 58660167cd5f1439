#include "nilgraph/theorems.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "nilgraph/error.hpp"
#include "nilgraph/nilpotency.hpp"

namespace nilgraph {

namespace {

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

GroupPtr make(const std::string &spec, const SuiteOptions &o) {
  return build(spec, o.closure, o.cache_dir);
}

using u128 = unsigned __int128;

std::uint64_t exact_div(u128 a, u128 b) {
  if (b == 0 || a % b != 0) throw IntegrityError("inexact division in closed form");
  const u128 r = a / b;
  if (r > std::numeric_limits<std::uint64_t>::max()) throw InvalidArgument("q too large");
  return static_cast<std::uint64_t>(r);
}

std::array<std::uint64_t, 4> suzuki_terms(std::uint64_t q) {
  if (q > (1u << 21)) throw InvalidArgument("q too large");
  const SuzukiParams p = SuzukiParams::from_q(static_cast<std::uint32_t>(q));
  const u128 q2 = u128(q) * q;
  const u128 base = q2 * (q2 + 1);
  const u128 r = p.r;
  return {static_cast<std::uint64_t>(q2 + 1), exact_div(base, 2),
          exact_div(base * (q - 1), 4 * (q + 2 * r + 1)),
          exact_div(base * (q - 1), 4 * (q - 2 * r + 1))};
}

std::vector<ElementSet> conjugates(const Group &g, const ElementSet &m) {
  const auto &cg = g.conj_by_generator();
  std::unordered_set<ElementSet, ElementSetHash> seen{m};
  std::vector<ElementSet> out{m};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto &map : cg) {
      ElementSet c(g.order());
      out[head].for_each([&](Index x) { c.insert(map[x]); });
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
  }
  return out;
}

std::optional<Index> first_of_order(const Group &g, Index order) {
  for (Index x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == order) return x;
  }
  return std::nullopt;
}

// Clique number of the quotient graph by branch and bound, ignoring the fast path.
std::size_t omega_by_search(const NilpotentizerTable &table, std::size_t order,
                            const CliqueOptions &options) {
  if (order == 1) return 0;
  if (table.size() == 1) return 1;
  const auto c = max_clique(quotient_graph(table).graph, options);
  if (!c.exact) throw SearchTimeout("clique search node budget exhausted", c.size, {});
  return c.size;
}

bool all_proper_nilpotent(const NilpotentizerTable &t) {
  return std::all_of(t.entries.begin() + 1, t.entries.end(),
                     [](const TableEntry &e) { return e.is_nilpotent_subgroup; });
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::published: return "published";
    case Provenance::derived: return "derived";
    case Provenance::trivial: return "trivial";
    case Provenance::conjecture: return "conjecture";
  }
  return "unknown";
}

bool VerificationReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult &c) {
    return c.pass || c.provenance == Provenance::conjecture;
  });
}

Json VerificationReport::to_json(bool with_timing) const {
  Json out;
  out["suite"] = suite;
  Json arr = Json::array();
  for (const auto &c : claims) {
    Json j{{"claim", c.claim},
           {"paper_ref", c.paper_ref},
           {"expected", c.expected},
           {"provenance", to_string(c.provenance)},
           {"computed", c.computed},
           {"pass", c.pass}};
    if (with_timing) j["seconds"] = c.seconds;
    if (!c.notes.empty()) j["notes"] = c.notes;
    arr.push_back(std::move(j));
  }
  out["claims"] = std::move(arr);
  Json oos = Json::array();
  for (const auto &[id, why] : out_of_scope) oos.push_back({{"claim", id}, {"reason", why}});
  out["out_of_scope"] = std::move(oos);
  out["pass"] = all_pass();
  return out;
}

ClaimResult make_claim(std::string id, std::string ref, Json expected, Provenance prov,
                       Json computed, double seconds, std::string notes) {
  ClaimResult c;
  c.claim = std::move(id);
  c.paper_ref = std::move(ref);
  c.pass = expected == computed;
  c.expected = std::move(expected);
  c.provenance = prov;
  c.computed = std::move(computed);
  c.seconds = seconds;
  c.notes = std::move(notes);
  return c;
}

std::uint64_t theorem1_formula(std::uint64_t q) {
  const auto t = suzuki_terms(q);
  return t[0] + t[1] + t[2] + t[3];
}

std::uint64_t corollary_nilp_suzuki(std::uint64_t q) { return theorem1_formula(q) + 1; }

SuzukiPartitionReport verify_suzuki_partition(const Group &g, std::uint32_t q,
                                              const NilpotentizerTable &nilp,
                                              const NilpotentizerTable &cent) {
  const SuzukiParams p = SuzukiParams::from_q(q);
  SuzukiPartitionReport rep;
  rep.q = q;
  rep.r = p.r;
  auto fail = [&](const std::string &why) {
    if (rep.failure.empty()) rep.failure = why;
  };
  std::vector<ElementSet> kinds{sylow_subgroup(g, 2)};
  for (Index ord : {q - 1, q - 2 * p.r + 1, q + 2 * p.r + 1}) {
    const auto x = first_of_order(g, ord);
    if (!x) {
      fail("no element of order " + std::to_string(ord));
      return rep;
    }
    kinds.push_back(g.generate({*x}));
  }
  rep.order_f = kinds[0].size();
  rep.order_a = kinds[1].size();
  rep.order_b = kinds[2].size();
  rep.order_c = kinds[3].size();

  std::vector<std::vector<ElementSet>> members;
  for (const auto &m : kinds) members.push_back(conjugates(g, m));
  rep.t = members[0].size();
  rep.s = members[1].size();
  rep.n = members[2].size();
  rep.k = members[3].size();

  std::vector<std::uint32_t> cover(g.order(), 0);
  for (const auto &list : members) {
    for (const auto &m : list) {
      rep.element_count += m.size() - 1;
      m.for_each([&](Index x) { ++cover[x]; });
    }
  }
  rep.partition_valid = true;
  for (Index x = 1; x < g.order(); ++x) {
    if (cover[x] != 1) {
      rep.partition_valid = false;
      fail("element " + std::to_string(x) + " lies in " + std::to_string(cover[x]) + " members");
      break;
    }
  }

  rep.centralizer_condition = true;
  rep.nilpotentizer_condition = true;
  for (const auto &list : members) {
    for (const auto &m : list) {
      m.for_each([&](Index b) {
        if (b == 0) return;
        if (rep.centralizer_condition && !cent.of(b).subset_of(m)) {
          rep.centralizer_condition = false;
          fail("centralizer of element " + std::to_string(b) + " leaves its member");
        }
        if (rep.nilpotentizer_condition && !(nilp.of(b) == m)) {
          rep.nilpotentizer_condition = false;
          fail("nilpotentizer of element " + std::to_string(b) + " differs from its member");
        }
      });
    }
  }
  return rep;
}

VerificationReport suzuki_suite(std::uint32_t q, const SuiteOptions &o) {
  VerificationReport rep;
  rep.suite = "suzuki";
  const std::string ref = "clique number of the nonnilpotent graph of Sz(q)";
  const std::string ref_nilp = "number of nilpotentizers of Sz(q)";
  const SuzukiParams p = SuzukiParams::from_q(q);

  {
    Stopwatch sw;
    const auto t = suzuki_terms(8);
    rep.add(make_claim("suzuki.formula.q8.terms", ref, Json::array({65, 2080, 560, 1456}),
                       Provenance::derived, Json::array({t[0], t[1], t[2], t[3]}), sw.seconds()));
    rep.add(make_claim("suzuki.formula.q8", ref, 4161, Provenance::derived, theorem1_formula(8),
                       sw.seconds()));
    rep.add(make_claim("suzuki.formula.q32", ref, 1049601, Provenance::derived,
                       theorem1_formula(32), sw.seconds()));
    rep.add(make_claim("suzuki.nilp_formula.q8", ref_nilp, 4162, Provenance::derived,
                       corollary_nilp_suzuki(8), sw.seconds()));
    rep.add(make_claim("suzuki.nilp_formula.q32", ref_nilp, 1049602, Provenance::derived,
                       corollary_nilp_suzuki(32), sw.seconds()));
  }
  rep.out_of_scope.emplace_back(
      "suzuki.pipeline.q32", "Sz(32) has 32537600 elements; only the closed form is evaluated");

  if (q != 8) {
    rep.out_of_scope.emplace_back("suzuki.pipeline.q" + std::to_string(q),
                                  "enumeration is limited to Sz(8)");
    return rep;
  }

  Stopwatch sw;
  const GroupPtr g = make("Sz(8)", o);
  const std::uint64_t q2 = std::uint64_t(q) * q;
  rep.add(make_claim("suzuki.order", "order of Sz(q)", q2 * (q2 + 1) * (q - 1),
                     Provenance::derived, g->order(), sw.seconds()));

  Stopwatch st;
  const auto nilp = nilp_table(*g, o.nilgraph);
  const auto cent = centralizer_table(*g, o.nilgraph);
  const double table_seconds = st.seconds();

  Stopwatch sp;
  const auto part = verify_suzuki_partition(*g, q, nilp, cent);
  const double ps = sp.seconds() + table_seconds;
  const std::string pref = "partition of Sz(q) into conjugates of F, A, B, C";
  const std::uint32_t r = p.r;
  rep.add(make_claim("suzuki.partition.subgroup_orders", pref,
                     Json::array({q2, q - 1, q - 2 * r + 1, q + 2 * r + 1}), Provenance::derived,
                     Json::array({part.order_f, part.order_a, part.order_b, part.order_c}), ps));
  rep.add(make_claim("suzuki.partition.conjugate_counts", pref,
                     Json::array({65, 2080, 560, 1456}), Provenance::derived,
                     Json::array({part.t, part.s, part.k, part.n}), ps, "order (t, s, k, n)"));
  rep.add(make_claim("suzuki.partition.element_count", pref, g->order() - 1, Provenance::derived,
                     part.element_count, ps));
  rep.add(make_claim("suzuki.partition.valid", pref, true, Provenance::published,
                     part.partition_valid, ps, part.failure));
  rep.add(make_claim("suzuki.partition.centralizers", pref, true, Provenance::published,
                     part.centralizer_condition, ps, part.failure));
  rep.add(make_claim("suzuki.partition.nilpotentizers", pref, true, Provenance::published,
                     part.nilpotentizer_condition, ps, part.failure));
  rep.add(make_claim("suzuki.omega.partition_sum", ref, 4161, Provenance::derived,
                     part.t + part.s + part.k + part.n, ps,
                     "each partition member is nilpotent and contributes one vertex"));

  {
    Stopwatch s2;
    const Json hyper = hypercenter(*g).last().size();
    const Json engel = right_engel_set(*g, std::nullopt, o.nilgraph.jobs).right_engel.size();
    const Json nil = nil_of_group(nilp).size();
    rep.add(make_claim("suzuki.nil_hypercenter_engel", "nil(G) = Z*(G) = R(G) = 1",
                       Json::array({1, 1, 1}), Provenance::published, Json::array({nil, hyper, engel}),
                       s2.seconds() + table_seconds, "sizes of nil(G), Z*(G), R(G)"));
  }
  rep.add(make_claim("suzuki.all_nilpotentizers_nilpotent",
                     "every proper nilpotentizer is a nilpotent subgroup", true,
                     Provenance::published, all_proper_nilpotent(nilp), table_seconds));
  rep.add(make_claim("suzuki.nilp_size", ref_nilp, corollary_nilp_suzuki(8), Provenance::derived,
                     nilp.size(), table_seconds));
  {
    Stopwatch s3;
    const auto w = omega(*g, nilp, o.nilgraph);
    rep.add(make_claim("suzuki.omega.pipeline", ref, theorem1_formula(8), Provenance::derived,
                       w.omega, s3.seconds() + table_seconds, "method " + to_string(w.method)));
  }
  {
    Stopwatch s4;
    const std::size_t w = omega_by_search(nilp, g->order(), o.nilgraph.clique);
    rep.add(make_claim("suzuki.omega.clique_search", ref, theorem1_formula(8),
                       Provenance::derived, w, s4.seconds() + table_seconds));
  }
  return rep;
}

VerificationReport pgl_suite(const std::vector<std::uint32_t> &pgl_qs,
                             const std::vector<std::uint32_t> &gl_qs, const SuiteOptions &o) {
  VerificationReport rep;
  rep.suite = "pgl";
  const std::string ref = "clique number of PGL(2,q) is q^2+q+1";
  const std::string ref_gl = "clique number is unchanged modulo the centre of GL(n,q)";
  std::map<std::uint32_t, std::size_t> pgl_omega;
  auto pgl = [&](std::uint32_t q) {
    if (auto it = pgl_omega.find(q); it != pgl_omega.end()) return it->second;
    const auto g = make("PGL(2," + std::to_string(q) + ")", o);
    return pgl_omega[q] = omega(*g, o.nilgraph).omega;
  };
  for (std::uint32_t q : pgl_qs) {
    Stopwatch sw;
    const std::size_t w = pgl(q);
    const auto prov = (q == 4 || q == 7) ? Provenance::published : Provenance::derived;
    rep.add(make_claim("pgl.omega.q" + std::to_string(q), ref, q * q + q + 1, prov, w,
                       sw.seconds()));
    Stopwatch s2;
    const auto psl = make("PSL(2," + std::to_string(q) + ")", o);
    const std::size_t wp = omega(*psl, o.nilgraph).omega;
    rep.add(make_claim("pgl.psl_le_pgl.q" + std::to_string(q),
                       "clique number of PSL(2,q) is at most that of PGL(2,q)", true,
                       Provenance::published, wp <= w, s2.seconds(),
                       "omega(PSL) = " + std::to_string(wp)));
  }
  for (std::uint32_t q : gl_qs) {
    Stopwatch sw;
    const std::size_t w = pgl(q);
    const auto gl = make("GL(2," + std::to_string(q) + ")", o);
    const std::size_t wg = omega(*gl, o.nilgraph).omega;
    rep.add(make_claim("gl.omega.q" + std::to_string(q), ref_gl, w, Provenance::published, wg,
                       sw.seconds(), "expected value is omega(PGL(2,q)) from the pipeline"));
    Stopwatch s2;
    const auto quo = quotient_by_normal(gl, center(*gl), o.closure);
    const std::size_t wq = omega(*quo, o.nilgraph).omega;
    const auto pg = make("PGL(2," + std::to_string(q) + ")", o);
    rep.add(make_claim("gl.quotient_by_center.q" + std::to_string(q), ref_gl,
                       Json::array({pg->order(), w}), Provenance::derived,
                       Json::array({quo->order(), wq}), s2.seconds(),
                       "GL(2,q)/Z against PGL(2,q): order, omega"));
  }
  return rep;
}

VerificationReport psl33_suite(const SuiteOptions &o, bool exact_omega) {
  VerificationReport rep;
  rep.suite = "psl33";
  const std::string ref = "nilpotentizer census of PSL(3,3)";
  Stopwatch sw;
  const auto g = make("PSL(3,3)", o);
  rep.add(make_claim("psl33.order_classes", "order and class number of PSL(3,3)",
                     Json::array({5616, 12}), Provenance::derived,
                     Json::array({g->order(), g->classes().count()}), sw.seconds()));
  Stopwatch st;
  const auto table = nilp_table(*g, o.nilgraph);
  const double ts = st.seconds();
  std::set<std::size_t> sizes;
  std::map<std::size_t, std::size_t> count;
  for (const auto &e : table.entries) {
    sizes.insert(e.set.size());
    ++count[e.set.size()];
  }
  rep.add(make_claim("psl33.nilpotentizer_sizes", ref,
                     Json::array({6, 13, 16, 27, 32, 162, 192, 5616}), Provenance::published,
                     Json(std::vector<std::size_t>(sizes.begin(), sizes.end())), ts));
  rep.add(make_claim("psl33.counts", ref, Json::array({468, 351, 144, 52}), Provenance::published,
                     Json::array({count[6], count[16], count[13], count[27]}), ts,
                     "counts for sizes 6, 16, 13, 27"));
  std::vector<Index> x;
  bool nilpotent = true;
  for (const auto &e : table.entries) {
    const std::size_t s = e.set.size();
    if (s == 6 || s == 16 || s == 13 || s == 27) {
      x.push_back(e.representative);
      nilpotent = nilpotent && e.is_nilpotent_subgroup;
    }
  }
  rep.add(make_claim("psl33.small_nilpotentizers_nilpotent", ref, true, Provenance::published,
                     nilpotent, ts));
  Stopwatch sx;
  bool pairwise = true;
  for (std::size_t i = 0; i < x.size() && pairwise; ++i) {
    for (std::size_t j = i + 1; j < x.size() && pairwise; ++j) {
      pairwise = !two_gen_nilpotent(*g, x[i], x[j]);
    }
  }
  rep.add(make_claim("psl33.nonnilpotent_subset", "lower bound 1015 for the clique number",
                     Json{{"size", 1015}, {"pairwise_nonnilpotent", true}}, Provenance::published,
                     Json{{"size", x.size()}, {"pairwise_nonnilpotent", pairwise}},
                     sx.seconds() + ts));
  if (exact_omega) {
    for (const std::string spec : {"PSL(3,3)", "PGL(3,3)"}) {
      Stopwatch so;
      const std::string id = spec == "PSL(3,3)" ? "psl33.omega_exact" : "pgl33.omega_exact";
      try {
        const auto h = spec == "PSL(3,3)" ? g : make(spec, o);
        const auto w = h == g ? omega(*g, table, o.nilgraph) : omega(*h, o.nilgraph);
        rep.add(make_claim(id, "conjectured clique number 1015", 1015, Provenance::conjecture,
                           w.omega, so.seconds() + (h == g ? ts : 0),
                           "order " + std::to_string(h->order()) + ", method " +
                               to_string(w.method)));
      } catch (const SearchTimeout &e) {
        rep.add(make_claim(id, "conjectured clique number 1015", 1015, Provenance::conjecture,
                           Json{{"lower_bound", e.lower_bound}}, so.seconds(),
                           "clique search budget exhausted"));
      }
    }
  }
  return rep;
}

ElementSet sylow_subgroup(const Group &g, std::uint64_t p) {
  std::uint64_t target = 1;
  for (std::uint64_t n = g.order(); n % p == 0; n /= p) target *= p;
  const ElementSet pel = p_elements(g, g.all(), p);
  ElementSet s = g.generate({});
  std::vector<Index> gens;
  while (s.size() < target) {
    bool grown = false;
    for (Index x : pel.indices()) {
      if (s.contains(x)) continue;
      bool normalizes = true;
      for (Index h : gens) normalizes = normalizes && s.contains(g.conj(h, x));
      if (!normalizes) continue;
      gens.push_back(x);
      s = g.generate(gens);
      grown = true;
      break;
    }
    if (!grown) throw IntegrityError("Sylow search stalled");
  }
  return s;
}

ElementSet normal_core(const Group &g, const ElementSet &s) {
  const auto &cg = g.conj_by_generator();
  ElementSet c = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index x : c.indices()) {
      for (const auto &map : cg) {
        if (!c.contains(map[x])) {
          c.erase(x);
          changed = true;
          break;
        }
      }
    }
  }
  return c;
}

bool is_semisimple(const Group &g) {
  for (auto [p, e] : factorize(g.order())) {
    if (normal_core(g, sylow_subgroup(g, p)).size() > 1) return false;
  }
  return true;
}

std::vector<std::string> default_semisimple_corpus() {
  return {"A(5)", "PSL(2,7)", "S(5)", "PGL(2,7)", "A(6)", "S(6)", "PSL(2,8)", "PSL(2,11)",
          "A(5)xA(5)"};
}

VerificationReport theorem3_classify(const std::vector<std::string> &corpus, const SuiteOptions &o) {
  VerificationReport rep;
  rep.suite = "semisimple";
  const std::string ref = "semisimple groups with clique number at most 72";
  std::vector<std::pair<std::string, std::vector<std::pair<Index, Index>>>> named;
  for (const std::string s : {"A(5)", "PSL(2,7)", "S(5)", "PGL(2,7)"}) {
    named.emplace_back(s, class_fingerprint(*make(s, o)));
  }
  Json expected_small = Json::array(), computed_small = Json::array();
  bool conclusive = true;
  for (const auto &spec : corpus) {
    Stopwatch sw;
    const auto g = make(spec, o);
    const auto fp = class_fingerprint(*g);
    std::string match;
    for (const auto &[name, f] : named) {
      if (f == fp) match = name;
    }
    rep.add(make_claim("semisimple." + spec + ".is_semisimple", "no nontrivial normal abelian subgroup",
                       true, Provenance::derived, is_semisimple(*g), sw.seconds()));
    Stopwatch s2;
    std::size_t w = 0;
    bool exact = true;
    try {
      w = omega(*g, o.nilgraph).omega;
    } catch (const SearchTimeout &e) {
      w = e.lower_bound;
      exact = false;
    }
    const bool small = w <= 72;
    std::string notes = (exact ? "omega = " : "omega >= ") + std::to_string(w);
    if (!match.empty()) notes += ", isomorphism type " + match;
    if (!exact && small) {
      conclusive = false;
      notes += ", inconclusive";
    }
    rep.add(make_claim("semisimple." + spec + ".omega_le_72", ref, !match.empty(),
                       Provenance::published, small, s2.seconds(), notes));
    if (!match.empty()) expected_small.push_back(spec);
    if (small) computed_small.push_back(spec);
    if (spec == "A(5)" || spec == "PSL(2,7)") {
      rep.add(make_claim("semisimple." + spec + ".omega", ref, spec == "A(5)" ? 21 : 57,
                         Provenance::published, w, s2.seconds()));
    }
    if (!match.empty()) {
      Stopwatch s3;
      const std::size_t wa = omega_noncommuting(*g, o.nilgraph).omega;
      rep.add(make_claim("semisimple." + spec + ".noncommuting_dominates",
                         "clique number of N_G is at most that of A_G", true, Provenance::published,
                         w <= wa, s3.seconds(), "omega(A_G) = " + std::to_string(wa)));
    }
  }
  rep.add(make_claim("semisimple.classification", ref, expected_small, Provenance::published,
                     computed_small, 0, conclusive ? "" : "some members inconclusive"));
  rep.out_of_scope.emplace_back("semisimple.psu37_sylow43",
                                "Sylow 43-subgroup count of PSU(3,7) is cited, not computed");
  return rep;
}

std::vector<ElementSet> all_subgroups(const Group &g, std::size_t limit) {
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  std::vector<ElementSet> subs;
  std::vector<std::vector<Index>> gens;
  std::vector<Index> cyclic_gens;
  auto add = [&](ElementSet s, std::vector<Index> gs) {
    if (index.count(s)) return false;
    if (subs.size() >= limit) throw ResourceLimit("subgroup enumeration limit reached");
    index.emplace(s, subs.size());
    subs.push_back(std::move(s));
    gens.push_back(std::move(gs));
    return true;
  };
  add(g.generate({}), {});
  for (Index x = 1; x < g.order(); ++x) {
    if (add(g.generate({x}), {x})) cyclic_gens.push_back(x);
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (Index x : cyclic_gens) {
      if (subs[i].contains(x)) continue;
      auto gs = gens[i];
      gs.push_back(x);
      ElementSet s = g.generate(gs);
      add(std::move(s), std::move(gs));
    }
  }
  return subs;
}

VerificationReport proposition_suite(const Group &g, const std::string &label,
                                     const SuiteOptions &o) {
  VerificationReport rep;
  rep.suite = "props";
  const auto id = [&](const std::string &s) { return label + "." + s; };
  Stopwatch st;
  const auto nilp = nilp_table(g, o.nilgraph);
  const auto cent = centralizer_table(g, o.nilgraph);
  const double ts = st.seconds();
  const std::size_t n = g.order();
  const std::size_t size = nilp.size();

  rep.add(make_claim(id("nil_identity_is_group"), "nilpotentizer of the identity", n,
                     Provenance::trivial, nilp.of(0).size(), ts));
  {
    Stopwatch sw;
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) {
      if (n > 360 && g.classes().representatives[g.classes().class_of[x]] != x) continue;
      ok = nilpotentizer(g, x) == nilp.of(x) && centralizer(g, x) == cent.of(x);
    }
    rep.add(make_claim(id("table_matches_direct_sweep"), "nilpotentizer definition", true,
                       Provenance::trivial, ok, sw.seconds() + ts,
                       n > 360 ? "class representatives" : "all elements"));
  }
  {
    Stopwatch sw;
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) ok = cent.of(x).subset_of(nilp.of(x));
    rep.add(make_claim(id("centralizer_in_nilpotentizer"), "C_G(x) lies in nil_G(x)", true,
                       Provenance::trivial, ok, sw.seconds() + ts));
  }
  {
    Stopwatch sw;
    bool ok = true;
    const Index step = n <= 360 ? 1 : static_cast<Index>(std::max<std::size_t>(1, n / 48));
    std::vector<Index> hs;
    for (Index h = 0; h < n; h += step) hs.push_back(h);
    for (Index h : g.generators()) hs.push_back(h);
    for (Index x = 0; x < n && ok; ++x) {
      for (Index h : hs) {
        if (!(nilp.of(g.conj(x, h)) == conjugate_set(g, nilp.of(x), h))) {
          ok = false;
          break;
        }
      }
    }
    rep.add(make_claim(id("conjugation_equivariance"), "nil_G(x^h) = nil_G(x)^h", true,
                       Provenance::trivial, ok, sw.seconds() + ts,
                       n <= 360 ? "exhaustive" : "all x, sampled h"));
  }
  const bool nilpotent_group = is_nilpotent(g, g.all());
  const bool solvable_group = is_solvable(g, g.all());
  rep.add(make_claim(id("nilpotency_tests_agree"), "nilpotency via lower central series",
                     nilpotent_group, Provenance::trivial,
                     is_nilpotent_by_lower_central_series(g, g.all()), 0));
  std::size_t w = 0;
  {
    Stopwatch sw;
    w = omega_by_search(nilp, n, o.nilgraph.clique);
    const auto fast = omega(g, nilp, o.nilgraph);
    rep.add(make_claim(id("omega_routes_agree"), "clique number", w, Provenance::trivial,
                       fast.omega, sw.seconds() + ts, "method " + to_string(fast.method)));
    if (size > 1) {
      rep.add(make_claim(id("omega_plus_one_le_nilp"), "omega + 1 <= |nilp(G)|", true,
                         Provenance::published, w + 1 <= size, sw.seconds() + ts,
                         "omega = " + std::to_string(w) + ", |nilp| = " + std::to_string(size)));
      if (all_proper_nilpotent(nilp)) {
        rep.add(make_claim(id("omega_equality_all_nilpotent"),
                           "equality when all nilpotentizers are nilpotent subgroups", size,
                           Provenance::published, w + 1, sw.seconds() + ts));
      }
    }
  }
  {
    Stopwatch sw;
    const ElementSet nil = nil_of_group(nilp);
    const ElementSet z = hypercenter(g).last();
    const auto engel = right_engel_set(g, std::nullopt, o.nilgraph.jobs);
    rep.add(make_claim(id("nil_hypercenter_engel"), "nil(G) = Z*(G) = R(G)", true,
                       Provenance::published, nil == z && z == engel.right_engel && engel.exact,
                       sw.seconds() + ts, "|nil(G)| = " + std::to_string(nil.size())));
  }
  rep.add(make_claim(id("nilp_not_2_3_4"), "no N(n)-group for n in {2,3,4}", true,
                     Provenance::published, size < 2 || size > 4, 0,
                     "|nilp| = " + std::to_string(size)));
  rep.add(make_claim(id("nilp_lt_5_nilpotent"), "|nilp| < 5 implies nilpotent", true,
                     Provenance::published, size >= 5 || nilpotent_group, 0));
  rep.add(make_claim(id("nilp_lt_22_solvable"), "|nilp| < 22 implies solvable", true,
                     Provenance::published, size >= 22 || solvable_group, 0));
  {
    Stopwatch sw;
    const auto wa = omega(g, cent, o.nilgraph).omega;
    rep.add(make_claim(id("noncommuting_dominates"), "omega(N_G) <= omega(A_G)", true,
                       Provenance::trivial, w <= wa, sw.seconds() + ts,
                       "omega(A_G) = " + std::to_string(wa)));
    if (center(g).size() == 1 && is_ac_group(g)) {
      rep.add(make_claim(id("centerless_ac_equality"), "centerless AC-group: omega(N_G) = omega(A_G)",
                         wa, Provenance::published, w, sw.seconds() + ts));
    }
  }
  return rep;
}

std::vector<std::string> default_property_corpus() {
  return {"S(3)",     "S(4)",     "S(5)",     "A(4)",    "A(5)",      "D(4)",      "D(5)",
          "Q8",       "GL(2,3)",  "SL(2,5)",  "PSL(2,5)", "PSL(2,7)", "S(3)xS(3)", "S(3)xA(5)"};
}

namespace {

struct Summary {
  std::size_t nilp = 0;
  std::size_t omega = 0;
};

Summary summarize(const Group &g, const SuiteOptions &o) {
  const auto t = nilp_table(g, o.nilgraph);
  return {t.size(), omega(g, t, o.nilgraph).omega};
}

Json pair(const Summary &s) { return Json::array({s.nilp, s.omega}); }

}  // namespace

VerificationReport property_suite(const std::vector<std::string> &corpus, const SuiteOptions &o) {
  VerificationReport rep;
  rep.suite = "props";
  std::map<std::string, Summary> sums;
  auto summary = [&](const std::string &spec) {
    if (auto it = sums.find(spec); it != sums.end()) return it->second;
    return sums[spec] = summarize(*make(spec, o), o);
  };
  for (const auto &spec : corpus) {
    const auto g = make(spec, o);
    auto sub = proposition_suite(*g, spec, o);
    for (auto &c : sub.claims) rep.add(std::move(c));
  }

  {
    const std::string ref = "|nilp| and omega are multiplicative over direct products";
    for (const auto &[a, b] : std::vector<std::pair<std::string, std::string>>{
             {"S(3)", "S(3)"}, {"S(3)", "A(5)"}}) {
      Stopwatch sw;
      const auto sa = summary(a), sb = summary(b), sp = summary(a + "x" + b);
      rep.add(make_claim("product." + a + "x" + b, ref,
                         Json::array({sa.nilp * sb.nilp, sa.omega * sb.omega}), Provenance::published,
                         pair(sp), sw.seconds(), "(|nilp|, omega)"));
    }
    rep.add(make_claim("product.S(3)xS(3).values", ref, Json::array({25, 16}), Provenance::derived,
                       pair(summary("S(3)xS(3)")), 0));
    rep.add(make_claim("product.S(3)xA(5).values", ref, Json::array({110, 84}),
                       Provenance::derived, pair(summary("S(3)xA(5)")), 0));
  }

  {
    // S3 <= S4 <= S5 as point stabilizers, A5 <= S5 as the derived subgroup.
    Stopwatch sw;
    const std::string ref = "|nilp| and omega are monotone on subgroups";
    const auto s5 = make("S(5)", o);
    auto stabilizer = [](const Group &g, Word pt) {
      ElementSet s(g.order());
      for (Index x = 0; x < g.order(); ++x) {
        if (g.words(x)[pt] == pt) s.insert(x);
      }
      return s;
    };
    const auto s4 = s5->subgroup(stabilizer(*s5, 4));
    const auto s3 = s4->subgroup(stabilizer(*s4, 3));
    const auto a5 = s5->subgroup(derived_series(*s5, s5->all()).at(1));
    const Summary x3 = summarize(*s3, o), x4 = summarize(*s4, o), x5 = summarize(*s5, o),
                  xa = summarize(*a5, o);
    rep.add(make_claim("subgroups.orders", ref, Json::array({6, 24, 60, 120}), Provenance::trivial,
                       Json::array({s3->order(), s4->order(), a5->order(), s5->order()}),
                       sw.seconds()));
    const bool mono = x3.nilp <= x4.nilp && x4.nilp <= x5.nilp && xa.nilp <= x5.nilp &&
                      x3.omega <= x4.omega && x4.omega <= x5.omega && xa.omega <= x5.omega;
    rep.add(make_claim("subgroups.monotone", ref, true, Provenance::published, mono, sw.seconds(),
                       "(|nilp|, omega): S3 " + pair(x3).dump() + ", S4 " + pair(x4).dump() +
                           ", A5 " + pair(xa).dump() + ", S5 " + pair(x5).dump()));
    rep.add(make_claim("subgroups.S3_A5_values", ref, Json::array({5, 4, 22, 21}),
                       Provenance::published, Json::array({x3.nilp, x3.omega, xa.nilp, xa.omega}),
                       sw.seconds()));
  }

  {
    const std::string ref = "quotients by subgroups of the hypercenter keep omega";
    auto check = [&](const std::string &spec, bool use_hypercenter) {
      Stopwatch sw;
      const auto g = make(spec, o);
      const ElementSet k = use_hypercenter ? hypercenter(*g).last() : center(*g);
      const auto q = quotient_by_normal(g, k, o.closure);
      const Summary sg = summarize(*g, o), sq = summarize(*q, o);
      rep.add(make_claim("quotient." + spec + ".omega", ref, sg.omega, Provenance::published,
                         sq.omega, sw.seconds(),
                         "|K| = " + std::to_string(k.size()) + ", |G/K| = " + std::to_string(q->order())));
      rep.add(make_claim("quotient." + spec + ".nilp", "|nilp(G)| >= |nilp(G/Z*(G))|", true,
                         Provenance::published, sg.nilp >= sq.nilp, sw.seconds(),
                         std::to_string(sg.nilp) + " vs " + std::to_string(sq.nilp)));
      return q;
    };
    const auto q = check("SL(2,5)", true);
    rep.add(make_claim("quotient.SL(2,5).is_PSL(2,5)", ref, true, Provenance::trivial,
                       class_fingerprint(*q) == class_fingerprint(*make("PSL(2,5)", o)), 0));
    for (const std::string spec : {"GL(2,3)", "GL(2,4)", "GL(2,5)"}) check(spec, false);
  }

  {
    Stopwatch sw;
    const auto s4 = make("S(4)", o);
    auto c = std::static_pointer_cast<const PermutationCarrier>(s4->carrier_ptr());
    const Index x = s4->index_of(c->from_cycles({{0, 2}, {1, 3}}));
    const ElementSet nil = nilpotentizer(*s4, x);
    rep.add(make_claim("s4.double_transposition", "nilpotentizer that is not a subgroup",
                       Json{{"size", 16}, {"is_subgroup", false}}, Provenance::published,
                       Json{{"size", nil.size()}, {"is_subgroup", is_subgroup(*s4, nil)}},
                       sw.seconds()));
  }

  {
    Stopwatch sw;
    std::size_t checked = 0;
    bool none_234 = true, small_nilpotent = true, small_solvable = true;
    for (const auto &spec : corpus) {
      const auto g = make(spec, o);
      if (g->order() > 360) continue;
      for (const auto &s : all_subgroups(*g)) {
        if (s.size() > 200) continue;
        const auto h = g->subgroup(s);
        const std::size_t size = nilp_table(*h, o.nilgraph).size();
        ++checked;
        none_234 = none_234 && (size < 2 || size > 4);
        if (size < 5) small_nilpotent = small_nilpotent && is_nilpotent(*h, h->all());
        if (size < 22) small_solvable = small_solvable && is_solvable(*h, h->all());
      }
    }
    const std::string notes = std::to_string(checked) +
                              " subgroups of order <= 200 in corpus groups of order <= 360";
    rep.add(make_claim("subgroup_census.nilp_not_2_3_4", "no N(n)-group for n in {2,3,4}", true,
                       Provenance::published, none_234, sw.seconds(), notes));
    rep.add(make_claim("subgroup_census.nilp_lt_5_nilpotent", "|nilp| < 5 implies nilpotent", true,
                       Provenance::published, small_nilpotent, sw.seconds(), notes));
    rep.add(make_claim("subgroup_census.nilp_lt_22_solvable", "|nilp| < 22 implies solvable", true,
                       Provenance::published, small_solvable, sw.seconds(), notes));
  }
  return rep;
}

}  // namespace nilgraph
