#include "nilgraph/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "nilgraph/error.hpp"

namespace nilgraph {

namespace {

constexpr Index kEmpty = ~Index{0};

std::uint64_t hash_words(std::span<const Word> w) {
  std::uint64_t h = 1469598103934665603ull;
  for (Word x : w) {
    h ^= x;
    h *= 1099511628211ull;
  }
  h ^= h >> 29;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 32;
  return h;
}

thread_local std::vector<Word> scratch;

std::span<Word> scratch_of(std::size_t width) {
  if (scratch.size() < width) scratch.resize(width);
  return {scratch.data(), width};
}

}  // namespace

std::string to_string(CarrierKind kind) {
  switch (kind) {
    case CarrierKind::permutation: return "permutation";
    case CarrierKind::matrix: return "matrix";
    case CarrierKind::projective: return "projective-matrix";
    case CarrierKind::product: return "product";
    case CarrierKind::quotient: return "quotient";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Carriers

std::string Carrier::format(std::span<const Word> w) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  os << "]";
  return os.str();
}

Element Carrier::identity_element() const {
  Element e{kind(), std::vector<Word>(width())};
  identity(e.words);
  return e;
}

PermutationCarrier::PermutationCarrier(std::size_t degree) : degree_(degree) {
  if (degree == 0 || degree > 65535) throw InvalidArgument("permutation degree out of range");
}

std::string PermutationCarrier::describe() const { return "perm:" + std::to_string(degree_); }

void PermutationCarrier::identity(std::span<Word> out) const {
  std::iota(out.begin(), out.end(), Word{0});
}

void PermutationCarrier::multiply(std::span<const Word> a, std::span<const Word> b,
                                  std::span<Word> out) const {
  for (std::size_t i = 0; i < degree_; ++i) out[i] = b[a[i]];
}

void PermutationCarrier::validate(std::span<const Word> w) const {
  if (w.size() != degree_) throw InvalidArgument("permutation has wrong degree");
  std::vector<bool> seen(degree_, false);
  for (Word x : w) {
    if (x >= degree_ || seen[x]) throw InvalidArgument("image array is not a bijection");
    seen[x] = true;
  }
}

std::string PermutationCarrier::format(std::span<const Word> w) const {
  std::ostringstream os;
  std::vector<bool> seen(degree_, false);
  bool any = false;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i] || w[i] == i) continue;
    any = true;
    os << "(";
    for (std::size_t j = i; !seen[j]; j = w[j]) {
      seen[j] = true;
      os << (j == i ? "" : " ") << j;
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

Element PermutationCarrier::from_cycles(const std::vector<std::vector<Word>> &cycles) const {
  std::vector<Word> img(degree_);
  identity(img);
  std::vector<bool> used(degree_, false);
  for (const auto &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree_) throw InvalidArgument("cycle point out of range");
      if (used[c[i]]) throw InvalidArgument("cycle point repeated");
      used[c[i]] = true;
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  Element e = Element::permutation(std::move(img));
  validate(e.words);
  return e;
}

MatrixCarrier::MatrixCarrier(Field field, std::size_t dim, bool projective)
    : field_(std::move(field)), dim_(dim), projective_(projective) {
  if (dim == 0) throw InvalidArgument("matrix dimension must be positive");
}

std::string MatrixCarrier::describe() const {
  return std::string(projective_ ? "pmat:" : "mat:") + std::to_string(dim_) + ":" +
         field_.to_string();
}

void MatrixCarrier::identity(std::span<Word> out) const {
  std::fill(out.begin(), out.end(), Word{0});
  for (std::size_t i = 0; i < dim_; ++i) out[i * dim_ + i] = 1;
}

void MatrixCarrier::multiply(std::span<const Word> a, std::span<const Word> b,
                             std::span<Word> out) const {
  const std::size_t d = dim_;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::uint32_t acc = 0;
      for (std::size_t k = 0; k < d; ++k) {
        acc = field_.add_raw(acc, field_.mul_raw(a[i * d + k], b[k * d + j]));
      }
      out[i * d + j] = static_cast<Word>(acc);
    }
  }
  if (projective_) normalize(out);
}

void MatrixCarrier::normalize(std::span<Word> w) const {
  for (Word x : w) {
    if (x != 0) {
      if (x == 1) return;
      const std::uint32_t s = field_.inv_raw(x);
      for (auto &y : w) y = static_cast<Word>(field_.mul_raw(y, s));
      return;
    }
  }
}

void MatrixCarrier::normalize_point(std::span<Word> v) const { normalize(v); }

std::uint32_t MatrixCarrier::determinant(std::span<const Word> w) const {
  const std::size_t d = dim_;
  std::vector<std::uint32_t> m(w.begin(), w.end());
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && m[piv * d + c] == 0) ++piv;
    if (piv == d) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < d; ++j) std::swap(m[piv * d + j], m[c * d + j]);
      det = field_.neg_raw(det);
    }
    det = field_.mul_raw(det, m[c * d + c]);
    const std::uint32_t pinv = field_.inv_raw(m[c * d + c]);
    for (std::size_t r = c + 1; r < d; ++r) {
      const std::uint32_t f = field_.mul_raw(m[r * d + c], pinv);
      if (f == 0) continue;
      const std::uint32_t nf = field_.neg_raw(f);
      for (std::size_t j = c; j < d; ++j) {
        m[r * d + j] = field_.add_raw(m[r * d + j], field_.mul_raw(nf, m[c * d + j]));
      }
    }
  }
  return det;
}

void MatrixCarrier::validate(std::span<const Word> w) const {
  if (w.size() != width()) throw InvalidArgument("matrix has wrong size");
  for (Word x : w) {
    if (x >= field_.size()) throw InvalidArgument("matrix entry outside the field");
  }
  if (determinant(w) == 0) throw InvalidArgument("matrix is singular");
  if (projective_) {
    std::vector<Word> c(w.begin(), w.end());
    normalize(c);
    if (!std::equal(c.begin(), c.end(), w.begin())) {
      throw InvalidArgument("projective matrix is not normalized");
    }
  }
}

std::string MatrixCarrier::format(std::span<const Word> w) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < dim_; ++j) os << (j ? " " : "") << w[i * dim_ + j];
  }
  os << "]";
  return os.str();
}

Element MatrixCarrier::make(const std::vector<std::uint32_t> &entries) const {
  if (entries.size() != width()) throw InvalidArgument("matrix has wrong number of entries");
  Element e{kind(), std::vector<Word>(width())};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] >= field_.size()) throw InvalidArgument("matrix entry outside the field");
    e.words[i] = static_cast<Word>(entries[i]);
  }
  if (projective_) normalize(e.words);
  validate(e.words);
  return e;
}

std::vector<Word> MatrixCarrier::act_on_point(std::span<const Word> point,
                                              std::span<const Word> m) const {
  const std::size_t d = dim_;
  std::vector<Word> out(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    std::uint32_t acc = 0;
    for (std::size_t k = 0; k < d; ++k) {
      acc = field_.add_raw(acc, field_.mul_raw(point[k], m[k * d + j]));
    }
    out[j] = static_cast<Word>(acc);
  }
  normalize_point(out);
  return out;
}

ProductCarrier::ProductCarrier(GroupPtr left, GroupPtr right)
    : left_(std::move(left)), right_(std::move(right)) {}

std::string ProductCarrier::describe() const {
  return "prod:(" + left_->carrier().describe() + ")x(" + right_->carrier().describe() + ")";
}

void ProductCarrier::identity(std::span<Word> out) const {
  std::fill(out.begin(), out.end(), Word{0});
}

void ProductCarrier::multiply(std::span<const Word> a, std::span<const Word> b,
                              std::span<Word> out) const {
  const Index l = left_->mul(left_of(a), left_of(b));
  const Index r = right_->mul(right_of(a), right_of(b));
  out[0] = static_cast<Word>(l & 0xffff);
  out[1] = static_cast<Word>(l >> 16);
  out[2] = static_cast<Word>(r & 0xffff);
  out[3] = static_cast<Word>(r >> 16);
}

void ProductCarrier::validate(std::span<const Word> w) const {
  if (w.size() != 4 || left_of(w) >= left_->order() || right_of(w) >= right_->order()) {
    throw InvalidArgument("product element out of range");
  }
}

std::string ProductCarrier::format(std::span<const Word> w) const {
  return "(" + left_->carrier().format(left_->words(left_of(w))) + ", " +
         right_->carrier().format(right_->words(right_of(w))) + ")";
}

Element ProductCarrier::make(Index left, Index right) const {
  Element e{CarrierKind::product,
            {static_cast<Word>(left & 0xffff), static_cast<Word>(left >> 16),
             static_cast<Word>(right & 0xffff), static_cast<Word>(right >> 16)}};
  validate(e.words);
  return e;
}

QuotientCarrier::QuotientCarrier(GroupPtr parent, std::vector<Index> coset_label)
    : parent_(std::move(parent)), label_(std::move(coset_label)) {}

std::string QuotientCarrier::describe() const {
  Index n = 0;
  for (Index i = 0; i < label_.size(); ++i) n += label_[i] == 0;
  return "quot:(" + parent_->carrier().describe() + ")/" + std::to_string(n);
}

void QuotientCarrier::identity(std::span<Word> out) const {
  out[0] = 0;
  out[1] = 0;
}

void QuotientCarrier::multiply(std::span<const Word> a, std::span<const Word> b,
                               std::span<Word> out) const {
  const Index x = a[0] | (Index(a[1]) << 16);
  const Index y = b[0] | (Index(b[1]) << 16);
  const Index l = label_[parent_->mul(x, y)];
  out[0] = static_cast<Word>(l & 0xffff);
  out[1] = static_cast<Word>(l >> 16);
}

void QuotientCarrier::validate(std::span<const Word> w) const {
  const Index x = w[0] | (Index(w[1]) << 16);
  if (x >= label_.size() || label_[x] != x) throw InvalidArgument("not a coset label");
}

Element QuotientCarrier::coset_of(Index parent_element) const {
  const Index l = label_.at(parent_element);
  return {CarrierKind::quotient, {static_cast<Word>(l & 0xffff), static_cast<Word>(l >> 16)}};
}

// ---------------------------------------------------------------------------
// Group

void Group::insert_hash(Index i) {
  if (slots_.empty() || std::size_t(order_) * 2 > slots_.size()) {
    std::size_t cap = std::max<std::size_t>(64, slots_.size() * 2);
    while (cap < std::size_t(order_) * 2 + 2) cap *= 2;
    slots_.assign(cap, kEmpty);
    slot_mask_ = cap - 1;
    for (Index j = 0; j < order_; ++j) {
      if (j == i) continue;
      std::uint64_t h = hash_words(words(j)) & slot_mask_;
      while (slots_[h] != kEmpty) h = (h + 1) & slot_mask_;
      slots_[h] = j;
    }
  }
  std::uint64_t h = hash_words(words(i)) & slot_mask_;
  while (slots_[h] != kEmpty) h = (h + 1) & slot_mask_;
  slots_[h] = i;
}

std::optional<Index> Group::find(std::span<const Word> w) const {
  if (w.size() != width_) return std::nullopt;
  std::uint64_t h = hash_words(w) & slot_mask_;
  while (true) {
    const Index s = slots_[h];
    if (s == kEmpty) return std::nullopt;
    auto cand = words(s);
    if (std::equal(cand.begin(), cand.end(), w.begin())) return s;
    h = (h + 1) & slot_mask_;
  }
}

Index Group::index_of(const Element &e) const {
  if (e.kind != carrier_->kind()) throw InvalidArgument("element carrier does not match group");
  auto i = find(e.words);
  if (!i) throw InvalidArgument("element is not a member of the group");
  return *i;
}

Element Group::element(Index i) const {
  auto w = words(i);
  return {carrier_->kind(), std::vector<Word>(w.begin(), w.end())};
}

Index Group::mul_slow(Index a, Index b) const {
  auto out = scratch_of(width_);
  carrier_->multiply(words(a), words(b), out);
  auto r = find(out);
  if (!r) throw IntegrityError("product left the enumerated group");
  return *r;
}

Index Group::pow(Index a, std::int64_t e) const {
  const std::int64_t n = orders_[a];
  e = ((e % n) + n) % n;
  Index result = 0, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

MutableGroupPtr Group::closure(CarrierPtr carrier, const std::vector<Element> &generators,
                        const ClosureOptions &options) {
  std::shared_ptr<Group> g(new Group());
  g->carrier_ = std::move(carrier);
  g->width_ = g->carrier_->width();
  g->options_ = options;
  for (const auto &gen : generators) {
    if (gen.kind != g->carrier_->kind()) throw InvalidArgument("generator carrier mismatch");
    g->carrier_->validate(gen.words);
  }
  g->data_.resize(g->width_);
  g->carrier_->identity(std::span<Word>(g->data_.data(), g->width_));
  g->order_ = 1;
  g->insert_hash(0);

  std::vector<Word> buf(g->width_);
  for (Index cur = 0; cur < g->order_; ++cur) {
    for (const auto &gen : generators) {
      g->carrier_->multiply(g->words(cur), gen.words, buf);
      if (g->find(buf)) continue;
      if (g->order_ >= options.element_cap) {
        throw ResourceLimit("group enumeration exceeded the element cap of " +
                            std::to_string(options.element_cap));
      }
      g->data_.insert(g->data_.end(), buf.begin(), buf.end());
      ++g->order_;
      g->insert_hash(g->order_ - 1);
    }
  }
  for (const auto &gen : generators) {
    const Index i = *g->find(gen.words);
    if (i != 0 && std::find(g->generators_.begin(), g->generators_.end(), i) ==
                       g->generators_.end()) {
      g->generators_.push_back(i);
    }
  }
  g->finish(options);
  return g;
}

MutableGroupPtr Group::from_elements(CarrierPtr carrier, std::vector<Word> data,
                              std::vector<Index> generators, const ClosureOptions &options) {
  std::shared_ptr<Group> g(new Group());
  g->carrier_ = std::move(carrier);
  g->width_ = g->carrier_->width();
  g->options_ = options;
  if (data.size() % g->width_ != 0) throw InvalidArgument("element payload has bad length");
  g->data_ = std::move(data);
  const auto n = static_cast<Index>(g->data_.size() / g->width_);
  if (n == 0) throw InvalidArgument("element payload is empty");
  std::vector<Word> id(g->width_);
  g->carrier_->identity(id);
  if (!std::equal(id.begin(), id.end(), g->data_.begin())) {
    throw InvalidArgument("payload does not start with the identity");
  }
  std::size_t cap = 64;
  while (cap < std::size_t(n) * 2 + 2) cap *= 2;
  g->slots_.assign(cap, kEmpty);
  g->slot_mask_ = cap - 1;
  g->order_ = n;
  for (Index i = 0; i < n; ++i) {
    g->carrier_->validate(g->words(i));
    if (g->find(g->words(i))) throw InvalidArgument("duplicate element in payload");
    std::uint64_t h = hash_words(g->words(i)) & g->slot_mask_;
    while (g->slots_[h] != kEmpty) h = (h + 1) & g->slot_mask_;
    g->slots_[h] = i;
  }
  for (Index i : generators) {
    if (i >= n) throw InvalidArgument("generator index out of range");
  }
  std::vector<Word> prod(g->width_);
  for (Index i = 0; i < n; ++i) {
    for (Index s : generators) {
      g->carrier_->multiply(g->words(i), g->words(s), prod);
      if (!g->find(prod)) throw InvalidArgument("payload is not closed");
    }
  }
  g->generators_ = std::move(generators);
  g->finish(options);
  return g;
}

void Group::finish(const ClosureOptions &options) {
  if (order_ <= options.table_limit) {
    table_.resize(std::size_t(order_) * order_);
    for (Index a = 0; a < order_; ++a) {
      for (Index b = 0; b < order_; ++b) table_[std::size_t(a) * order_ + b] = mul_slow(a, b);
    }
  }
  orders_.assign(order_, 1);
  inverse_.assign(order_, 0);
  for (Index a = 1; a < order_; ++a) {
    Index prev = 0, acc = a, n = 1;
    while (acc != 0) {
      prev = acc;
      acc = mul(acc, a);
      if (++n > order_) throw IntegrityError("element order exceeds group order");
    }
    orders_[a] = n;
    inverse_[a] = prev;
  }
}

const std::vector<std::vector<Index>> &Group::conj_by_generator() const {
  std::call_once(conj_once_, [this] {
    conj_gen_.resize(generators_.size());
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      const Index g = generators_[k];
      conj_gen_[k].resize(order_);
      for (Index x = 0; x < order_; ++x) conj_gen_[k][x] = conj(x, g);
    }
  });
  return conj_gen_;
}

const ConjugacyClasses &Group::classes() const {
  std::call_once(classes_once_, [this] {
    const auto &cg = conj_by_generator();
    auto &c = classes_;
    c.class_of.assign(order_, kEmpty);
    c.parent.assign(order_, 0);
    c.via.assign(order_, 0);
    for (Index x = 0; x < order_; ++x) {
      if (c.class_of[x] != kEmpty) continue;
      const Index id = static_cast<Index>(c.representatives.size());
      c.representatives.push_back(x);
      c.members.emplace_back();
      auto &mem = c.members.back();
      c.class_of[x] = id;
      c.parent[x] = x;
      mem.push_back(x);
      for (std::size_t head = 0; head < mem.size(); ++head) {
        const Index y = mem[head];
        for (std::size_t k = 0; k < cg.size(); ++k) {
          const Index z = cg[k][y];
          if (c.class_of[z] != kEmpty) continue;
          c.class_of[z] = id;
          c.parent[z] = y;
          c.via[z] = static_cast<Index>(k);
          mem.push_back(z);
        }
      }
    }
  });
  return classes_;
}

ElementSet Group::generate(const std::vector<Index> &gens) const {
  ElementSet s(order_);
  std::vector<Index> list{0};
  s.insert(0);
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (Index g : gens) {
      const Index z = mul(list[head], g);
      if (!s.contains(z)) {
        s.insert(z);
        list.push_back(z);
      }
    }
  }
  return s;
}

namespace {

// Greedy generating set of the subgroup spanned by `s`; sets `closed` to
// whether that subgroup equals `s`.
std::vector<Index> greedy_generators(const Group &g, const ElementSet &s, bool &closed) {
  std::vector<Index> gens;
  ElementSet h = g.generate({});
  closed = true;
  for (Index x : s.indices()) {
    if (h.contains(x)) continue;
    gens.push_back(x);
    h = g.generate(gens);
    if (!h.subset_of(s)) {
      closed = false;
      return gens;
    }
  }
  closed = closed && h == s;
  return gens;
}

}  // namespace

MutableGroupPtr Group::subgroup(const ElementSet &s) const {
  bool closed = false;
  auto gens = greedy_generators(*this, s, closed);
  if (!closed) throw InvalidArgument("set is not a subgroup");
  std::vector<Element> els;
  for (Index i : gens) els.push_back(element(i));
  auto h = closure(carrier_, els, options_);
  if (h->order() != s.size()) throw IntegrityError("subgroup re-enumeration changed the order");
  return h;
}

// ---------------------------------------------------------------------------
// Structural queries

Index element_order(const Group &g, const Element &x) { return g.element_order(g.index_of(x)); }

ElementSet centralizer(const Group &g, Index x) {
  if (x >= g.order()) throw InvalidArgument("element index out of range");
  ElementSet c(g.order());
  for (Index b = 0; b < g.order(); ++b) {
    if (g.mul(b, x) == g.mul(x, b)) c.insert(b);
  }
  return c;
}

ElementSet centralizer(const Group &g, const Element &x) { return centralizer(g, g.index_of(x)); }

ElementSet center(const Group &g) {
  ElementSet z = g.all();
  for (Index gen : g.generators()) z &= centralizer(g, gen);
  return z;
}

bool is_subgroup(const Group &g, const ElementSet &s) {
  if (s.universe() != g.order()) throw InvalidArgument("set belongs to a different group");
  if (s.empty()) throw InvalidArgument("empty set");
  bool closed = false;
  greedy_generators(g, s, closed);
  return closed;
}

std::vector<Index> generating_set(const Group &g, const ElementSet &s) {
  if (s.universe() != g.order()) throw InvalidArgument("set belongs to a different group");
  bool closed = false;
  auto gens = greedy_generators(g, s, closed);
  if (!closed) throw InvalidArgument("set is not a subgroup");
  return gens;
}

bool is_normal_subgroup(const Group &g, const ElementSet &s) {
  if (!is_subgroup(g, s)) return false;
  const auto &cg = g.conj_by_generator();
  bool ok = true;
  s.for_each([&](Index x) {
    for (const auto &m : cg) ok = ok && s.contains(m[x]);
  });
  return ok;
}

bool is_abelian(const Group &g, const ElementSet &s) {
  bool closed = false;
  auto gens = greedy_generators(g, s, closed);
  if (!closed) throw InvalidArgument("set is not a subgroup");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

ElementSet conjugate_set(const Group &g, const ElementSet &s, Index h) {
  ElementSet out(g.order());
  const Index hi = g.inv(h);
  s.for_each([&](Index x) { out.insert(g.mul(g.mul(hi, x), h)); });
  return out;
}

MutableGroupPtr direct_product(const GroupPtr &left, const GroupPtr &right,
                        const ClosureOptions &options) {
  const std::uint64_t n = std::uint64_t(left->order()) * right->order();
  if (n > options.element_cap) {
    throw ResourceLimit("direct product order " + std::to_string(n) + " exceeds the element cap");
  }
  auto carrier = std::make_shared<ProductCarrier>(left, right);
  std::vector<Element> gens;
  for (Index g : left->generators()) gens.push_back(carrier->make(g, 0));
  for (Index h : right->generators()) gens.push_back(carrier->make(0, h));
  auto p = Group::closure(carrier, gens, options);
  if (p->order() != n) throw IntegrityError("direct product has the wrong order");
  p->label = left->label + "x" + right->label;
  return p;
}

MutableGroupPtr quotient_by_normal(const GroupPtr &g, const ElementSet &normal,
                            const ClosureOptions &options) {
  if (normal.universe() != g->order() || !is_normal_subgroup(*g, normal)) {
    throw InvalidArgument("quotient requires a normal subgroup");
  }
  std::vector<Index> label(g->order(), kEmpty);
  const auto members = normal.indices();
  for (Index x = 0; x < g->order(); ++x) {
    if (label[x] != kEmpty) continue;
    for (Index n : members) label[g->mul(x, n)] = x;
  }
  auto carrier = std::make_shared<QuotientCarrier>(g, std::move(label));
  std::vector<Element> gens;
  for (Index gen : g->generators()) gens.push_back(carrier->coset_of(gen));
  auto q = Group::closure(carrier, gens, options);
  if (std::size_t(q->order()) * members.size() != g->order()) {
    throw IntegrityError("quotient has the wrong order");
  }
  q->label = g->label + "/N" + std::to_string(members.size());
  return q;
}

std::vector<std::pair<Index, Index>> class_fingerprint(const Group &g) {
  const auto &c = g.classes();
  std::vector<std::pair<Index, Index>> fp;
  for (std::size_t i = 0; i < c.count(); ++i) {
    fp.emplace_back(static_cast<Index>(c.members[i].size()),
                    g.element_order(c.representatives[i]));
  }
  std::sort(fp.begin(), fp.end());
  return fp;
}

}  // namespace nilgraph
