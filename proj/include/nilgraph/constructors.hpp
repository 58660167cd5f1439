#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilgraph/group.hpp"

namespace nilgraph {

enum class Family { S, A, D, Q8, GL, SL, PGL, PSL, Sz, product };

/// Parsed group description, e.g. "PGL(2,7)" or "S(3)xA(5)".
struct GroupSpec {
  Family family = Family::S;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::vector<GroupSpec> factors;

  static GroupSpec parse(std::string_view text);
  std::string to_string() const;
  /// Closed-form order of the family member.
  std::uint64_t predicted_order() const;
};

struct SuzukiParams {
  std::uint32_t m = 1;
  std::uint32_t q = 8;  // 2^(2m+1)
  std::uint32_t r = 2;  // 2^m, so q = 2r^2

  static SuzukiParams from_q(std::uint32_t q);
};

/// Builds any supported family member and checks its order against the
/// closed form. `cache_dir`, when set, is used to store and reuse enumerations.
GroupPtr build(const GroupSpec &spec, const ClosureOptions &options = {},
               const std::optional<std::string> &cache_dir = std::nullopt);
GroupPtr build(std::string_view spec, const ClosureOptions &options = {},
               const std::optional<std::string> &cache_dir = std::nullopt);

/// Generators of Sz(q) inside Sp(4,q), in the order
/// S(1,0), S(x,0) [unipotent], M(primitive) [torus], T [antidiagonal involution].
struct SuzukiGenerators {
  std::shared_ptr<const MatrixCarrier> carrier;
  std::vector<Element> unipotent;
  Element torus;
  Element involution;

  std::vector<Element> all() const;
};

SuzukiGenerators suzuki_generators(const SuzukiParams &params);

/// Lower unitriangular Suzuki matrix S(a,b), row-major.
std::vector<std::uint32_t> suzuki_unipotent(const Field &f, FieldElement a, FieldElement b);

struct PermutationModel {
  GroupPtr group;
  /// Orbit points (normalized row vectors) in permutation point order.
  std::vector<std::vector<Word>> orbit;
  bool faithful = false;
};

/// The action of a matrix group on the projective orbit of `seed` (row
/// vectors, right action). Throws if the action is unfaithful unless
/// `allow_unfaithful`. When faithful, index i of the result corresponds to
/// index i of `g` (same generator order, same breadth-first enumeration); this
/// is verified on every (element, generator) product.
PermutationModel permutation_model(const GroupPtr &g, std::vector<Word> seed,
                                   bool allow_unfaithful = false);

}  // namespace nilgraph
