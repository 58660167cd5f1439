#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nilgraph/group.hpp"

namespace nilgraph {

/// Upper (ascending) or lower (descending) central series of a subgroup.
struct CentralSeries {
  std::vector<ElementSet> terms;
  bool stabilized = false;

  const ElementSet &last() const { return terms.back(); }
};

struct EngelReport {
  ElementSet right_engel;
  std::size_t max_depth_used = 0;
  /// False when some commutator walk hit the depth cap undecided; the set is then a superset.
  bool exact = true;
};

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Nilpotency of a subgroup: every p-element commutes with every q-element for p != q.
/// Throws InvalidArgument if `h` is not a subgroup.
bool is_nilpotent(const Group &g, const ElementSet &h);
/// Independent check: the lower central series of `h` reaches the trivial group.
bool is_nilpotent_by_lower_central_series(const Group &g, const ElementSet &h);
CentralSeries lower_central_series(const Group &g, const ElementSet &h);

/// Whether <a, b> is nilpotent. Splits a and b into prime-power parts:
/// <a, b> is nilpotent iff parts for distinct primes commute and, for each
/// prime p, the p-parts generate a p-group. Each p-group probe aborts as soon
/// as an element of the wrong order appears or the Sylow bound is exceeded.
bool two_gen_nilpotent(const Group &g, Index a, Index b);
bool two_gen_nilpotent(const Group &g, const Element &a, const Element &b);

/// Upper central series Z_0 = 1 <= Z_1 <= ... iterated to stabilization; the
/// final term is the hypercenter.
CentralSeries hypercenter(const Group &g);

/// Right Engel elements: x with [x, y, ..., y] = 1 eventually for every y.
/// Defaults the depth cap to |G|. Runs on class representatives only (the set
/// is closed under conjugation); `jobs` > 1 splits representatives across threads.
EngelReport right_engel_set(const Group &g, std::optional<std::size_t> depth_cap = std::nullopt,
                            unsigned jobs = 1);

bool is_solvable(const Group &g, const ElementSet &h);
std::vector<ElementSet> derived_series(const Group &g, const ElementSet &h);

/// Normal closure in <ambient_gens> of the subgroup generated by `seeds`.
ElementSet normal_closure(const Group &g, const std::vector<Index> &ambient_gens,
                          const std::vector<Index> &seeds);

/// Elements of p-power order (including the identity) in `h`.
ElementSet p_elements(const Group &g, const ElementSet &h, std::uint64_t p);

}  // namespace nilgraph
