#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilgraph/element_set.hpp"
#include "nilgraph/ffield.hpp"

namespace nilgraph {

using Word = std::uint16_t;
using Index = std::uint32_t;

enum class CarrierKind : std::uint8_t {
  permutation = 1,
  matrix = 2,
  projective = 3,
  product = 4,
  quotient = 5,
};

std::string to_string(CarrierKind kind);

/// A group element as a flat word array interpreted by a Carrier:
/// permutation images, row-major matrix entries, or factor indices.
struct Element {
  CarrierKind kind = CarrierKind::permutation;
  std::vector<Word> words;

  static Element permutation(std::vector<Word> images) {
    return {CarrierKind::permutation, std::move(images)};
  }

  friend bool operator==(const Element &, const Element &) = default;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;
using MutableGroupPtr = std::shared_ptr<Group>;

/// Multiplication semantics for one ambient structure (S_n, GL(d,q), ...).
class Carrier {
public:
  virtual ~Carrier() = default;

  virtual CarrierKind kind() const = 0;
  virtual std::size_t width() const = 0;
  /// Stable textual identity; equal descriptions mean interchangeable carriers.
  virtual std::string describe() const = 0;
  virtual void identity(std::span<Word> out) const = 0;
  virtual void multiply(std::span<const Word> a, std::span<const Word> b,
                        std::span<Word> out) const = 0;
  /// Throws InvalidArgument unless `w` encodes a valid element in canonical form.
  virtual void validate(std::span<const Word> w) const = 0;
  virtual std::string format(std::span<const Word> w) const;

  Element identity_element() const;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

/// Permutations of {0..n-1}; the product ab applies a first, then b.
class PermutationCarrier final : public Carrier {
public:
  explicit PermutationCarrier(std::size_t degree);

  CarrierKind kind() const override { return CarrierKind::permutation; }
  std::size_t width() const override { return degree_; }
  std::string describe() const override;
  void identity(std::span<Word> out) const override;
  void multiply(std::span<const Word> a, std::span<const Word> b,
                std::span<Word> out) const override;
  void validate(std::span<const Word> w) const override;
  std::string format(std::span<const Word> w) const override;

  /// Builds a permutation from disjoint cycles, e.g. {{0,1},{2,3,4}}.
  Element from_cycles(const std::vector<std::vector<Word>> &cycles) const;

private:
  std::size_t degree_;
};

/// Invertible d x d matrices over a finite field, optionally modulo scalars.
///
/// Projective elements are scaled so the first nonzero row-major entry is 1.
class MatrixCarrier final : public Carrier {
public:
  MatrixCarrier(Field field, std::size_t dim, bool projective);

  CarrierKind kind() const override {
    return projective_ ? CarrierKind::projective : CarrierKind::matrix;
  }
  std::size_t width() const override { return dim_ * dim_; }
  std::string describe() const override;
  void identity(std::span<Word> out) const override;
  void multiply(std::span<const Word> a, std::span<const Word> b,
                std::span<Word> out) const override;
  void validate(std::span<const Word> w) const override;
  std::string format(std::span<const Word> w) const override;

  const Field &field() const { return field_; }
  std::size_t dim() const { return dim_; }
  bool projective() const { return projective_; }

  /// Element from row-major entries; normalizes projective carriers.
  Element make(const std::vector<std::uint32_t> &entries) const;
  void normalize(std::span<Word> w) const;
  std::uint32_t determinant(std::span<const Word> w) const;

  /// Row vector times matrix, result normalized as a projective point.
  std::vector<Word> act_on_point(std::span<const Word> point, std::span<const Word> m) const;
  void normalize_point(std::span<Word> v) const;

private:
  Field field_;
  std::size_t dim_;
  bool projective_;
};

/// Componentwise multiplication of index pairs over two enumerated groups.
class ProductCarrier final : public Carrier {
public:
  ProductCarrier(GroupPtr left, GroupPtr right);

  CarrierKind kind() const override { return CarrierKind::product; }
  std::size_t width() const override { return 4; }
  std::string describe() const override;
  void identity(std::span<Word> out) const override;
  void multiply(std::span<const Word> a, std::span<const Word> b,
                std::span<Word> out) const override;
  void validate(std::span<const Word> w) const override;
  std::string format(std::span<const Word> w) const override;

  Element make(Index left, Index right) const;
  static Index left_of(std::span<const Word> w) { return w[0] | (Index(w[1]) << 16); }
  static Index right_of(std::span<const Word> w) { return w[2] | (Index(w[3]) << 16); }

  const GroupPtr &left() const { return left_; }
  const GroupPtr &right() const { return right_; }

private:
  GroupPtr left_;
  GroupPtr right_;
};

/// Cosets of a normal subgroup, each labelled by its minimal-index member.
class QuotientCarrier final : public Carrier {
public:
  QuotientCarrier(GroupPtr parent, std::vector<Index> coset_label);

  CarrierKind kind() const override { return CarrierKind::quotient; }
  std::size_t width() const override { return 2; }
  std::string describe() const override;
  void identity(std::span<Word> out) const override;
  void multiply(std::span<const Word> a, std::span<const Word> b,
                std::span<Word> out) const override;
  void validate(std::span<const Word> w) const override;

  Element coset_of(Index parent_element) const;
  const GroupPtr &parent() const { return parent_; }

private:
  GroupPtr parent_;
  std::vector<Index> label_;
};

/// Conjugacy class partition. Classes are numbered by their minimal member,
/// which is also the representative. `parent`/`via` record a conjugation tree:
/// x = g^-1 * parent[x] * g with g = generators[via[x]] (roots point to themselves).
struct ConjugacyClasses {
  std::vector<Index> class_of;
  std::vector<Index> representatives;
  std::vector<std::vector<Index>> members;
  std::vector<Index> parent;
  std::vector<Index> via;

  std::size_t count() const { return representatives.size(); }
};

struct ClosureOptions {
  std::size_t element_cap = 1'000'000;
  std::size_t table_limit = 4096;
};

/// A fully enumerated finite group. Immutable once built; index 0 is the identity.
class Group {
public:
  static MutableGroupPtr closure(CarrierPtr carrier, const std::vector<Element> &generators,
                          const ClosureOptions &options = {});
  /// Rebuilds a group from a stored element list (cache path); no closure search.
  static MutableGroupPtr from_elements(CarrierPtr carrier, std::vector<Word> data,
                                std::vector<Index> generators,
                                const ClosureOptions &options = {});

  Index order() const { return order_; }
  const Carrier &carrier() const { return *carrier_; }
  const CarrierPtr &carrier_ptr() const { return carrier_; }
  const std::vector<Index> &generators() const { return generators_; }
  std::span<const Word> words(Index i) const {
    return {data_.data() + std::size_t(i) * width_, width_};
  }
  const std::vector<Word> &data() const { return data_; }
  Element element(Index i) const;

  std::optional<Index> find(std::span<const Word> w) const;
  /// Index of `e`; throws InvalidArgument if `e` is not a member.
  Index index_of(const Element &e) const;

  Index mul(Index a, Index b) const {
    if (!table_.empty()) return table_[std::size_t(a) * order_ + b];
    return mul_slow(a, b);
  }
  Index inv(Index a) const { return inverse_[a]; }
  Index pow(Index a, std::int64_t e) const;
  /// h^-1 x h
  Index conj(Index x, Index h) const { return mul(mul(inverse_[h], x), h); }
  /// x^-1 y^-1 x y
  Index comm(Index x, Index y) const {
    return mul(mul(inverse_[x], inverse_[y]), mul(x, y));
  }
  Index element_order(Index a) const { return orders_[a]; }
  const std::vector<Index> &element_orders() const { return orders_; }
  bool has_table() const { return !table_.empty(); }

  ElementSet all() const { return ElementSet::full(order_); }
  ElementSet empty_set() const { return ElementSet(order_); }

  const ConjugacyClasses &classes() const;
  /// conj_by_generator()[k][x] = g_k^-1 x g_k
  const std::vector<std::vector<Index>> &conj_by_generator() const;

  /// The subgroup generated by the listed elements, as an ElementSet.
  ElementSet generate(const std::vector<Index> &gens) const;
  /// A member subset re-enumerated as a group on the same carrier.
  MutableGroupPtr subgroup(const ElementSet &s) const;

  std::string label;

private:
  Group() = default;
  void finish(const ClosureOptions &options);
  Index mul_slow(Index a, Index b) const;
  void insert_hash(Index i);

  CarrierPtr carrier_;
  std::size_t width_ = 0;
  Index order_ = 0;
  std::vector<Word> data_;
  std::vector<Index> generators_;
  std::vector<Index> slots_;
  std::uint64_t slot_mask_ = 0;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<Index> orders_;
  ClosureOptions options_;

  mutable std::once_flag classes_once_;
  mutable ConjugacyClasses classes_;
  mutable std::once_flag conj_once_;
  mutable std::vector<std::vector<Index>> conj_gen_;
};

// Structural queries.

Index element_order(const Group &g, const Element &x);
ElementSet centralizer(const Group &g, Index x);
ElementSet centralizer(const Group &g, const Element &x);
ElementSet center(const Group &g);
bool is_subgroup(const Group &g, const ElementSet &s);
/// Greedy generating set of the subgroup `s`; throws InvalidArgument if `s` is not one.
std::vector<Index> generating_set(const Group &g, const ElementSet &s);
bool is_normal_subgroup(const Group &g, const ElementSet &s);
bool is_abelian(const Group &g, const ElementSet &s);
/// {h^-1 x h : x in s}
ElementSet conjugate_set(const Group &g, const ElementSet &s, Index h);
MutableGroupPtr direct_product(const GroupPtr &left, const GroupPtr &right,
                        const ClosureOptions &options = {});
MutableGroupPtr quotient_by_normal(const GroupPtr &g, const ElementSet &normal,
                            const ClosureOptions &options = {});

/// Sorted multiset of (class size, element order) pairs; an isomorphism invariant.
std::vector<std::pair<Index, Index>> class_fingerprint(const Group &g);

}  // namespace nilgraph
