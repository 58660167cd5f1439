#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilgraph/constructors.hpp"
#include "nilgraph/nilgraph.hpp"

namespace nilgraph {

using Json = nlohmann::ordered_json;

/// Where an expected value comes from: quoted from the published result,
/// derived by hand from it, trivial, or an open conjecture.
enum class Provenance { published, derived, trivial, conjecture };

std::string to_string(Provenance p);

struct ClaimResult {
  std::string claim;
  std::string paper_ref;
  Json expected;
  Provenance provenance = Provenance::derived;
  Json computed;
  bool pass = false;
  double seconds = 0;
  std::string notes;
};

struct VerificationReport {
  std::string suite;
  std::vector<ClaimResult> claims;
  /// Claims recorded but not computed, with the reason.
  std::vector<std::pair<std::string, std::string>> out_of_scope;

  bool all_pass() const;
  /// Stable JSON; timing appears only in "seconds" fields.
  Json to_json(bool with_timing = true) const;
  void add(ClaimResult c) { claims.push_back(std::move(c)); }
};

/// Builds a claim, marking pass iff expected == computed.
ClaimResult make_claim(std::string id, std::string ref, Json expected, Provenance prov,
                       Json computed, double seconds = 0, std::string notes = {});

struct SuiteOptions {
  NilgraphOptions nilgraph;
  std::optional<std::string> cache_dir;
  ClosureOptions closure;
};

// Suzuki groups.

/// (q^2+1) + q^2(q^2+1)/2 + q^2(q^2+1)(q-1)/(4(q+2r+1)) + q^2(q^2+1)(q-1)/(4(q-2r+1)).
/// Throws InvalidArgument unless q = 2^(2m+1), m >= 1; IntegrityError on an inexact division.
std::uint64_t theorem1_formula(std::uint64_t q);
std::uint64_t corollary_nilp_suzuki(std::uint64_t q);

struct SuzukiPartitionReport {
  std::uint32_t q = 0, r = 0;
  std::size_t order_f = 0, order_a = 0, order_b = 0, order_c = 0;
  /// Conjugate counts of F, A, C and B respectively.
  std::size_t t = 0, s = 0, k = 0, n = 0;
  /// Sum over all members of (|M| - 1).
  std::size_t element_count = 0;
  bool partition_valid = false;
  bool centralizer_condition = false;
  bool nilpotentizer_condition = false;
  std::string failure;
};

/// Finds F (a Sylow 2-subgroup) and cyclic A, B, C generated by
/// elements of orders q-1, q-2r+1, q+2r+1, enumerates all their conjugates
/// and checks that they partition G, that C_G(b) lies in M and nil_G(b) = M
/// for every nontrivial b in every member M.
SuzukiPartitionReport verify_suzuki_partition(const Group &g, std::uint32_t q,
                                              const NilpotentizerTable &nilp,
                                              const NilpotentizerTable &cent);

VerificationReport suzuki_suite(std::uint32_t q, const SuiteOptions &options = {});

// Linear groups.

VerificationReport pgl_suite(const std::vector<std::uint32_t> &pgl_qs = {4, 7, 8, 9},
                             const std::vector<std::uint32_t> &gl_qs = {4, 5, 7},
                             const SuiteOptions &options = {});

VerificationReport psl33_suite(const SuiteOptions &options = {}, bool exact_omega = true);

// Semisimple groups.

/// A Sylow p-subgroup, grown one normalizing p-element at a time.
ElementSet sylow_subgroup(const Group &g, std::uint64_t p);
/// Intersection of all conjugates of `s`: the largest conjugation-closed subset.
ElementSet normal_core(const Group &g, const ElementSet &s);
/// No nontrivial normal abelian subgroup, i.e. every p-core O_p(G) is trivial.
bool is_semisimple(const Group &g);

std::vector<std::string> default_semisimple_corpus();
VerificationReport theorem3_classify(const std::vector<std::string> &corpus,
                                     const SuiteOptions &options = {});

// Invariant battery.

/// Itemized invariant checks on one group, claim ids prefixed with `label`.
VerificationReport proposition_suite(const Group &g, const std::string &label,
                                     const SuiteOptions &options = {});
std::vector<std::string> default_property_corpus();
/// proposition_suite over the corpus plus the cross-group checks (products,
/// subgroup chains, quotients by central subgroups, the S4 example, and the
/// small-subgroup census of |nilp| values).
VerificationReport property_suite(const std::vector<std::string> &corpus,
                                  const SuiteOptions &options = {});

/// All subgroups of g (as element sets), via joins of cyclic subgroups.
/// Stops with ResourceLimit past `limit` subgroups.
std::vector<ElementSet> all_subgroups(const Group &g, std::size_t limit = 20000);

}  // namespace nilgraph
