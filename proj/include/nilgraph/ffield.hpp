#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nilgraph {

/// Dense encoding of a field element: the base-p digits of `rep` are the
/// coefficients of the residue polynomial, lowest degree first.
struct FieldElement {
  std::uint32_t rep = 0;

  friend bool operator==(FieldElement, FieldElement) = default;
};

/// Finite field GF(p^k) given by an irreducible modulus over GF(p).
///
/// Immutable after construction. Multiplication goes through log/antilog
/// tables (all supported sizes are <= 2^16); `mul_poly` is the table-free
/// reference path used to build and test them.
class Field {
public:
  /// `modulus` lists k+1 coefficients, lowest degree first, leading coefficient 1.
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  /// GF(q) with the shipped default modulus for q.
  static Field of_order(std::uint32_t q);

  /// Parses "GF(q)" or "GF(q);modulus=c0,c1,...,ck".
  static Field parse(std::string_view text);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  const std::vector<std::uint32_t> &modulus() const { return modulus_; }
  std::string to_string() const;

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// The class of the polynomial variable x. Requires k >= 2.
  FieldElement x() const;
  /// A fixed generator of the multiplicative group (smallest encoding of order q-1).
  FieldElement primitive() const { return {antilog_.empty() ? 0u : antilog_[1]}; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::int64_t e) const;

  /// Schoolbook multiply-and-reduce, independent of the tables.
  FieldElement mul_poly(FieldElement a, FieldElement b) const;

  /// a -> a^(2^(m+1)) on GF(2^(2m+1)).
  FieldElement suzuki_twist(FieldElement a) const;

  bool contains(FieldElement a) const { return a.rep < q_; }
  std::uint32_t multiplicative_order(FieldElement a) const;

  // Unchecked hot-path arithmetic on raw encodings (operands must be < q).
  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const {
    return p_ == 2 ? (a ^ b) : add_digits(a, b);
  }
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return antilog_[s];
  }
  std::uint32_t inv_raw(std::uint32_t a) const {
    std::uint32_t l = log_[a];
    return antilog_[l == 0 ? 0 : q_ - 1 - l];
  }
  std::uint32_t neg_raw(std::uint32_t a) const;

  friend bool operator==(const Field &a, const Field &b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

private:
  void check(FieldElement a) const;
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;
};

/// True iff the monic polynomial `poly` (lowest degree first) is irreducible
/// over GF(p), by trial division against every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t> &poly);

/// Returns (p, k) with q = p^k, or throws if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

}  // namespace nilgraph
