#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nilgraph/clique.hpp"
#include "nilgraph/group.hpp"

namespace nilgraph {

/// Which pairs count as "joined by nothing": nilpotent pairs (N_G) or commuting pairs (A_G).
enum class Relation { nilpotent, commuting };

std::string to_string(Relation r);

struct TableEntry {
  /// Smallest element index whose nilpotentizer (or centralizer) is `set`.
  Index representative = 0;
  ElementSet set;
  std::size_t member_count = 0;
  bool is_subgroup = false;
  bool is_nilpotent_subgroup = false;
};

/// Distinct nilpotentizers (or centralizers) of all elements, ordered by
/// representative. Entry 0 belongs to the identity and equals G.
struct NilpotentizerTable {
  Relation relation = Relation::nilpotent;
  std::vector<TableEntry> entries;
  /// entry_of[x] is the entry holding nil_G(x).
  std::vector<std::uint32_t> entry_of;

  std::size_t size() const { return entries.size(); }
  const ElementSet &of(Index x) const { return entries[entry_of[x]].set; }
};

struct NilgraphOptions {
  unsigned jobs = 1;
  CliqueOptions clique;
  /// Witnesses up to this size are rechecked pair by pair with the defining
  /// test; larger ones are rechecked against the table.
  std::size_t direct_recheck_limit = 1500;
};

/// {y : <x, y> nilpotent}, by a sweep over all of G.
ElementSet nilpotentizer(const Group &g, Index x);
ElementSet nilpotentizer(const Group &g, const Element &x);

/// Computes the set for one representative per conjugacy class and
/// transports it along the conjugation tree: nil(x^h) = nil(x)^h.
NilpotentizerTable nilp_table(const Group &g, const NilgraphOptions &options = {});
NilpotentizerTable centralizer_table(const Group &g, const NilgraphOptions &options = {});
NilpotentizerTable relation_table(const Group &g, Relation relation,
                                  const NilgraphOptions &options = {});

/// Intersection of all nilpotentizers.
ElementSet nil_of_group(const NilpotentizerTable &table);

/// N_G collapsed onto nilpotentizer classes, without the class whose set is G.
struct QuotientGraph {
  /// Table entry id of each vertex.
  std::vector<std::uint32_t> entries;
  std::vector<std::size_t> weights;
  BitGraph graph;
};

QuotientGraph quotient_graph(const NilpotentizerTable &table);

enum class OmegaMethod { trivial_group, weakly_nilpotent, fast_path, clique_search };

std::string to_string(OmegaMethod m);

struct OmegaResult {
  std::size_t omega = 0;
  /// Element indices, ascending.
  std::vector<Index> witness;
  OmegaMethod method = OmegaMethod::clique_search;
  std::size_t table_size = 0;
  std::uint64_t search_nodes = 0;
};

/// Exact clique number of N_G (or A_G for Relation::commuting). The trivial
/// group gets 0 and any other group without edges gets 1. Throws
/// SearchTimeout with the best lower bound when the node budget runs out, and
/// IntegrityError if the witness fails its recheck.
OmegaResult omega(const Group &g, const NilpotentizerTable &table,
                  const NilgraphOptions &options = {});
OmegaResult omega(const Group &g, const NilgraphOptions &options = {});
OmegaResult omega_noncommuting(const Group &g, const NilgraphOptions &options = {});

/// Whether the pair is an edge of the graph selected by `relation`.
bool adjacent(const Group &g, Relation relation, Index a, Index b);

/// Every centralizer of a noncentral element is abelian.
bool is_ac_group(const Group &g);

/// The whole graph on |G| vertices (vertex i is element i).
BitGraph full_graph(const NilpotentizerTable &table);
/// DIMACS text; a graph without edges is written as "p edge 0 0".
std::string export_dimacs(const BitGraph &graph);
/// JSON array of {representative, size, member_count, is_subgroup, is_nilpotent_subgroup}.
std::string table_json(const NilpotentizerTable &table);

}  // namespace nilgraph
