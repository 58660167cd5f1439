#include "nilgraph/nilgraph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <json.hpp>

#include "nilgraph/error.hpp"
#include "nilgraph/nilpotency.hpp"
#include "nilgraph/parallel.hpp"

namespace nilgraph {

std::string to_string(Relation r) {
  return r == Relation::nilpotent ? "nonnilpotent" : "noncommuting";
}

std::string to_string(OmegaMethod m) {
  switch (m) {
    case OmegaMethod::trivial_group: return "trivial-group";
    case OmegaMethod::weakly_nilpotent: return "weakly-nilpotent";
    case OmegaMethod::fast_path: return "fast-path";
    case OmegaMethod::clique_search: return "clique-search";
  }
  return "unknown";
}

bool adjacent(const Group &g, Relation relation, Index a, Index b) {
  if (relation == Relation::commuting) return g.mul(a, b) != g.mul(b, a);
  return !two_gen_nilpotent(g, a, b);
}

ElementSet nilpotentizer(const Group &g, Index x) {
  if (x >= g.order()) throw InvalidArgument("element index out of range");
  ElementSet s(g.order());
  for (Index y = 0; y < g.order(); ++y) {
    if (two_gen_nilpotent(g, x, y)) s.insert(y);
  }
  return s;
}

ElementSet nilpotentizer(const Group &g, const Element &x) {
  return nilpotentizer(g, g.index_of(x));
}

NilpotentizerTable nilp_table(const Group &g, const NilgraphOptions &options) {
  return relation_table(g, Relation::nilpotent, options);
}

NilpotentizerTable centralizer_table(const Group &g, const NilgraphOptions &options) {
  return relation_table(g, Relation::commuting, options);
}

NilpotentizerTable relation_table(const Group &g, Relation relation,
                                  const NilgraphOptions &options) {
  const auto &cl = g.classes();
  const auto &cg = g.conj_by_generator();
  const std::size_t nreps = cl.count();
  std::vector<ElementSet> rep_sets(nreps);
  parallel_for(nreps, options.jobs, [&](std::size_t c) {
    const Index r = cl.representatives[c];
    rep_sets[c] = relation == Relation::nilpotent ? nilpotentizer(g, r) : centralizer(g, r);
  });

  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> ids;
  std::vector<TableEntry> raw;
  std::vector<std::uint32_t> entry_of(g.order(), 0);
  auto record = [&](Index x, ElementSet s, bool sub, bool nil) {
    auto [it, fresh] = ids.try_emplace(std::move(s), static_cast<std::uint32_t>(raw.size()));
    if (fresh) {
      TableEntry e;
      e.representative = x;
      e.set = it->first;
      e.is_subgroup = sub;
      e.is_nilpotent_subgroup = nil;
      raw.push_back(std::move(e));
    }
    TableEntry &e = raw[it->second];
    e.representative = std::min(e.representative, x);
    ++e.member_count;
    entry_of[x] = it->second;
  };

  for (std::size_t c = 0; c < nreps; ++c) {
    for (Index x : cl.members[c]) {
      if (x == cl.representatives[c]) {
        ElementSet &s = rep_sets[c];
        const bool sub = s.size() == g.order() || is_subgroup(g, s);
        const bool nil = sub && is_nilpotent(g, s);
        record(x, std::move(s), sub, nil);
        continue;
      }
      const TableEntry &from = raw[entry_of[cl.parent[x]]];
      const auto &map = cg[cl.via[x]];
      ElementSet s(g.order());
      from.set.for_each([&](Index y) { s.insert(map[y]); });
      record(x, std::move(s), from.is_subgroup, from.is_nilpotent_subgroup);
    }
  }

  std::vector<std::uint32_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return raw[a].representative < raw[b].representative;
  });
  std::vector<std::uint32_t> renumber(raw.size());
  NilpotentizerTable table;
  table.relation = relation;
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    renumber[order[i]] = i;
    table.entries.push_back(std::move(raw[order[i]]));
  }
  for (auto &e : entry_of) e = renumber[e];
  table.entry_of = std::move(entry_of);
  return table;
}

ElementSet nil_of_group(const NilpotentizerTable &table) {
  ElementSet s = table.entries.at(0).set;
  for (const auto &e : table.entries) s &= e.set;
  return s;
}

QuotientGraph quotient_graph(const NilpotentizerTable &table) {
  QuotientGraph q;
  const std::size_t n = table.entry_of.size();
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    if (table.entries[i].set.size() == n) continue;
    q.entries.push_back(i);
    q.weights.push_back(table.entries[i].member_count);
  }
  q.graph = BitGraph(q.entries.size());
  for (std::size_t i = 0; i < q.entries.size(); ++i) {
    const auto &a = table.entries[q.entries[i]];
    for (std::size_t j = i + 1; j < q.entries.size(); ++j) {
      const auto &b = table.entries[q.entries[j]];
      if (!a.set.contains(b.representative)) q.graph.add_edge(i, j);
    }
  }
  return q;
}

namespace {

void recheck_witness(const Group &g, const NilpotentizerTable &table,
                     const std::vector<Index> &w, std::size_t direct_limit) {
  const bool direct = w.size() <= direct_limit;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const bool ok = direct ? adjacent(g, table.relation, w[i], w[j])
                             : !table.of(w[i]).contains(w[j]) && !table.of(w[j]).contains(w[i]);
      if (!ok) throw IntegrityError("clique witness contains a non-adjacent pair");
    }
  }
}

}  // namespace

OmegaResult omega(const Group &g, const NilpotentizerTable &table, const NilgraphOptions &options) {
  OmegaResult r;
  r.table_size = table.size();
  if (g.order() == 1) {
    r.method = OmegaMethod::trivial_group;
    return r;
  }
  if (table.size() == 1) {
    r.omega = 1;
    r.witness = {0};
    r.method = OmegaMethod::weakly_nilpotent;
    return r;
  }
  const bool fast = table.relation == Relation::nilpotent &&
                    std::all_of(table.entries.begin() + 1, table.entries.end(),
                                [](const TableEntry &e) { return e.is_nilpotent_subgroup; });
  if (fast) {
    r.method = OmegaMethod::fast_path;
    for (std::size_t i = 1; i < table.size(); ++i) r.witness.push_back(table.entries[i].representative);
  } else {
    r.method = OmegaMethod::clique_search;
    const QuotientGraph q = quotient_graph(table);
    const CliqueResult c = max_clique(q.graph, options.clique);
    r.search_nodes = c.nodes;
    for (std::size_t v : c.vertices) r.witness.push_back(table.entries[q.entries[v]].representative);
    std::sort(r.witness.begin(), r.witness.end());
    if (!c.exact) {
      throw SearchTimeout("clique search node budget exhausted", r.witness.size(), r.witness);
    }
  }
  r.omega = r.witness.size();
  recheck_witness(g, table, r.witness, options.direct_recheck_limit);
  return r;
}

OmegaResult omega(const Group &g, const NilgraphOptions &options) {
  return omega(g, nilp_table(g, options), options);
}

OmegaResult omega_noncommuting(const Group &g, const NilgraphOptions &options) {
  return omega(g, centralizer_table(g, options), options);
}

bool is_ac_group(const Group &g) {
  const ElementSet z = center(g);
  for (Index r : g.classes().representatives) {
    if (!z.contains(r) && !is_abelian(g, centralizer(g, r))) return false;
  }
  return true;
}

BitGraph full_graph(const NilpotentizerTable &table) {
  const std::size_t n = table.entry_of.size();
  BitGraph graph(n);
  for (Index x = 0; x < n; ++x) {
    const ElementSet &s = table.of(x);
    for (Index y = x + 1; y < n; ++y) {
      if (!s.contains(y)) graph.add_edge(x, y);
    }
  }
  return graph;
}

std::string export_dimacs(const BitGraph &graph) {
  if (graph.edge_count() == 0) return "p edge 0 0\n";
  return to_dimacs(graph);
}

std::string table_json(const NilpotentizerTable &table) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto &e : table.entries) {
    out.push_back({{"representative", e.representative},
                   {"size", e.set.size()},
                   {"member_count", e.member_count},
                   {"is_subgroup", e.is_subgroup},
                   {"is_nilpotent_subgroup", e.is_nilpotent_subgroup}});
  }
  return out.dump(2);
}

}  // namespace nilgraph
