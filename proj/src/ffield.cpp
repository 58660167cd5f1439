#include "nilgraph/ffield.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "nilgraph/error.hpp"

namespace nilgraph {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly &f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of f modulo g over GF(p); g nonzero.
Poly poly_mod(Poly f, const Poly &g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::size_t shift = f.size() - g.size();
    const std::uint32_t c = f.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - c * g[i] % p) % p;
    }
    trim(f);
  }
  return f;
}

Poly digits(std::uint32_t rep, std::uint32_t p, std::uint32_t len) {
  Poly d(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    d[i] = rep % p;
    rep /= p;
  }
  return d;
}

std::uint32_t undigits(const Poly &d, std::uint32_t p) {
  std::uint32_t r = 0;
  for (std::size_t i = d.size(); i-- > 0;) r = r * p + d[i];
  return r;
}

const std::map<std::uint32_t, Poly> &default_moduli() {
  static const std::map<std::uint32_t, Poly> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {64, {1, 1, 0, 1, 1, 0, 1}},
      {128, {1, 1, 0, 0, 0, 0, 0, 1}},
      {9, {2, 2, 1}},
      {27, {1, 2, 0, 1}},
      {25, {2, 4, 1}},
      {49, {3, 6, 1}},
  };
  return table;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("not a prime power: " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw InvalidArgument("not a prime power: " + std::to_string(q));
  return {static_cast<std::uint32_t>(p), k};
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t> &poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  if (deg == 1) return true;
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly g = digits(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime");
  if (k < 1) throw InvalidArgument("field degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 16)) throw InvalidArgument("field size exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (modulus_.size() != k + 1 || modulus_.back() != 1) {
    throw InvalidArgument("modulus must be monic of degree " + std::to_string(k));
  }
  for (auto c : modulus_) {
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  }
  if (!is_irreducible(p, modulus_)) {
    throw InvalidArgument("modulus is reducible over GF(" + std::to_string(p) + ")");
  }

  // Smallest encoding of multiplicative order q-1 drives the log tables.
  std::uint32_t gen = 0;
  for (std::uint32_t c = 1; c < q_ && gen == 0; ++c) {
    std::uint32_t acc = c, ord = 1;
    while (acc != 1) {
      acc = mul_poly({acc}, {c}).rep;
      ++ord;
    }
    if (ord == q_ - 1) gen = c;
  }
  if (q_ == 2) gen = 1;
  log_.assign(q_, 0);
  antilog_.assign(q_, 0);
  std::uint32_t acc = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    antilog_[i] = acc;
    log_[acc] = i;
    acc = mul_poly({acc}, {gen}).rep;
  }
  antilog_[q_ - 1] = 1;
}

Field Field::of_order(std::uint32_t q) {
  auto [p, k] = prime_power(q);
  if (k == 1) return Field(p, 1, {0, 1});
  auto it = default_moduli().find(q);
  if (it != default_moduli().end()) return Field(p, k, it->second);
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint32_t low = 0; low < count; ++low) {
    Poly f = digits(low, p, k);
    f.push_back(1);
    if (is_irreducible(p, f)) return Field(p, k, f);
  }
  throw IntegrityError("no irreducible polynomial found");
}

Field Field::parse(std::string_view text) {
  auto fail = [&]() { return InvalidArgument("bad field spec: " + std::string(text)); };
  std::string_view head = text;
  std::string_view tail;
  if (auto semi = text.find(';'); semi != std::string_view::npos) {
    head = text.substr(0, semi);
    tail = text.substr(semi + 1);
  }
  if (head.size() < 5 || head.substr(0, 3) != "GF(" || head.back() != ')') throw fail();
  std::uint32_t q = 0;
  auto inner = head.substr(3, head.size() - 4);
  auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), q);
  if (ec != std::errc() || ptr != inner.data() + inner.size()) throw fail();
  if (tail.empty()) return of_order(q);
  constexpr std::string_view key = "modulus=";
  if (tail.substr(0, key.size()) != key) throw fail();
  tail.remove_prefix(key.size());
  Poly coeffs;
  while (!tail.empty()) {
    auto comma = tail.find(',');
    auto tok = tail.substr(0, comma);
    std::uint32_t c = 0;
    auto [p2, ec2] = std::from_chars(tok.data(), tok.data() + tok.size(), c);
    if (ec2 != std::errc() || p2 != tok.data() + tok.size()) throw fail();
    coeffs.push_back(c);
    if (comma == std::string_view::npos) break;
    tail.remove_prefix(comma + 1);
  }
  auto [p, k] = prime_power(q);
  return Field(p, k, coeffs);
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  if (k_ > 1) {
    os << ";modulus=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  }
  return os.str();
}

FieldElement Field::x() const {
  if (k_ < 2) throw InvalidArgument("x is not a field element encoding for prime fields");
  return {p_};
}

void Field::check(FieldElement a) const {
  if (a.rep >= q_) {
    throw InvalidArgument("field element " + std::to_string(a.rep) + " out of range for " +
                          to_string());
  }
}

std::uint32_t Field::add_digits(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  std::uint32_t r = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

std::uint32_t Field::neg_raw(std::uint32_t a) const {
  if (p_ == 2) return a;
  std::uint32_t r = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {add_raw(a.rep, b.rep)};
}

FieldElement Field::neg(FieldElement a) const {
  check(a);
  return {neg_raw(a.rep)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {mul_raw(a.rep, b.rep)};
}

FieldElement Field::mul_poly(FieldElement a, FieldElement b) const {
  Poly da = digits(a.rep, p_, k_);
  Poly db = digits(b.rep, p_, k_);
  Poly prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  Poly r = poly_mod(prod, modulus_, p_);
  r.resize(k_, 0);
  return {undigits(r, p_)};
}

FieldElement Field::inv(FieldElement a) const {
  check(a);
  if (a.rep == 0) throw InvalidArgument("inversion of zero in " + to_string());
  return {inv_raw(a.rep)};
}

FieldElement Field::pow(FieldElement a, std::int64_t e) const {
  check(a);
  if (a.rep == 0) {
    if (e < 0) throw InvalidArgument("inversion of zero in " + to_string());
    return e == 0 ? one() : zero();
  }
  const std::int64_t n = q_ - 1;
  std::int64_t l = (static_cast<std::int64_t>(log_[a.rep]) * (((e % n) + n) % n)) % n;
  return {antilog_[static_cast<std::size_t>(l)]};
}

FieldElement Field::suzuki_twist(FieldElement a) const {
  if (p_ != 2 || k_ % 2 == 0) {
    throw InvalidArgument("Suzuki twist needs GF(2^(2m+1)), got " + to_string());
  }
  check(a);
  const std::uint32_t m = (k_ - 1) / 2;
  std::uint32_t r = a.rep;
  for (std::uint32_t i = 0; i < m + 1; ++i) r = mul_raw(r, r);
  return {r};
}

std::uint32_t Field::multiplicative_order(FieldElement a) const {
  check(a);
  if (a.rep == 0) throw InvalidArgument("zero has no multiplicative order");
  std::uint32_t ord = 1, acc = a.rep;
  while (acc != 1) {
    acc = mul_raw(acc, a.rep);
    ++ord;
  }
  return ord;
}

}  // namespace nilgraph
