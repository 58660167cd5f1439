#include "nilgraph/constructors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "nilgraph/cache.hpp"
#include "nilgraph/error.hpp"

namespace nilgraph {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint32_t parse_uint(std::string_view s, std::string_view whole) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("bad group spec: " + std::string(whole));
  }
  return v;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

void check_linear(const GroupSpec &s) {
  if (s.n < 2) throw InvalidArgument("linear groups need n >= 2");
  prime_power(s.q);
  if (s.q > (1u << 16)) throw InvalidArgument("field too large");
}

}  // namespace

SuzukiParams SuzukiParams::from_q(std::uint32_t q) {
  std::uint32_t k = 0;
  while ((std::uint64_t{1} << k) < q) ++k;
  if ((std::uint64_t{1} << k) != q || k % 2 == 0 || k < 3) {
    throw InvalidArgument("Suzuki groups need q = 2^(2m+1) with m >= 1, got q = " +
                          std::to_string(q));
  }
  SuzukiParams p;
  p.m = (k - 1) / 2;
  p.q = q;
  p.r = 1u << p.m;
  return p;
}

GroupSpec GroupSpec::parse(std::string_view raw) {
  const std::string text = strip(raw);
  if (text.empty()) throw InvalidArgument("empty group spec");
  // Split on top-level 'x'.
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw InvalidArgument("unbalanced parentheses: " + text);
    if (c == 'x' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw InvalidArgument("unbalanced parentheses: " + text);
  parts.push_back(cur);
  if (parts.size() > 1) {
    GroupSpec s;
    s.family = Family::product;
    for (const auto &p : parts) {
      if (p.empty()) throw InvalidArgument("empty product factor in: " + text);
      s.factors.push_back(parse(p));
    }
    return s;
  }

  GroupSpec s;
  if (text == "Q8") {
    s.family = Family::Q8;
    return s;
  }
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') {
    throw InvalidArgument("bad group spec: " + text);
  }
  const std::string name = text.substr(0, open);
  const std::string_view args(text.data() + open + 1, text.size() - open - 2);
  std::vector<std::string_view> nums;
  std::size_t start = 0;
  while (true) {
    auto comma = args.find(',', start);
    nums.push_back(args.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  auto one = [&]() {
    if (nums.size() != 1) throw InvalidArgument("expected one parameter: " + text);
    return parse_uint(nums[0], text);
  };
  auto two = [&]() {
    if (nums.size() != 2) throw InvalidArgument("expected two parameters: " + text);
    s.n = parse_uint(nums[0], text);
    s.q = parse_uint(nums[1], text);
    check_linear(s);
  };
  if (name == "S") {
    s.family = Family::S;
    s.n = one();
    if (s.n < 1) throw InvalidArgument("S(n) needs n >= 1");
  } else if (name == "A") {
    s.family = Family::A;
    s.n = one();
    if (s.n < 1) throw InvalidArgument("A(n) needs n >= 1");
  } else if (name == "D") {
    s.family = Family::D;
    s.n = one();
    if (s.n < 3) throw InvalidArgument("D(n) needs n >= 3");
  } else if (name == "GL") {
    s.family = Family::GL;
    two();
  } else if (name == "SL") {
    s.family = Family::SL;
    two();
  } else if (name == "PGL") {
    s.family = Family::PGL;
    two();
  } else if (name == "PSL") {
    s.family = Family::PSL;
    two();
  } else if (name == "Sz") {
    s.family = Family::Sz;
    s.q = one();
    SuzukiParams::from_q(s.q);
  } else {
    throw InvalidArgument("unknown group family: " + name);
  }
  return s;
}

std::string GroupSpec::to_string() const {
  const auto nq = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
  switch (family) {
    case Family::S: return "S(" + std::to_string(n) + ")";
    case Family::A: return "A(" + std::to_string(n) + ")";
    case Family::D: return "D(" + std::to_string(n) + ")";
    case Family::Q8: return "Q8";
    case Family::GL: return "GL" + nq;
    case Family::SL: return "SL" + nq;
    case Family::PGL: return "PGL" + nq;
    case Family::PSL: return "PSL" + nq;
    case Family::Sz: return "Sz(" + std::to_string(q) + ")";
    case Family::product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "x" : "") + factors[i].to_string();
      return out;
    }
  }
  return "?";
}

std::uint64_t GroupSpec::predicted_order() const {
  auto factorial = [](std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 2; i <= k; ++i) r *= i;
    return r;
  };
  auto gl = [&]() {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < n; ++i) r *= ipow(q, n) - ipow(q, i);
    return r;
  };
  switch (family) {
    case Family::S: return factorial(n);
    case Family::A: return n < 2 ? 1 : factorial(n) / 2;
    case Family::D: return 2ull * n;
    case Family::Q8: return 8;
    case Family::GL: return gl();
    case Family::SL: return gl() / (q - 1);
    case Family::PGL: return gl() / (q - 1);
    case Family::PSL: return gl() / (q - 1) / std::gcd<std::uint64_t>(n, q - 1);
    case Family::Sz: {
      const std::uint64_t qq = q;
      return qq * qq * (qq * qq + 1) * (qq - 1);
    }
    case Family::product: {
      std::uint64_t r = 1;
      for (const auto &f : factors) r *= f.predicted_order();
      return r;
    }
  }
  return 0;
}

std::vector<std::uint32_t> suzuki_unipotent(const Field &f, FieldElement a, FieldElement b) {
  const FieldElement ta = f.suzuki_twist(a);
  const FieldElement tb = f.suzuki_twist(b);
  const FieldElement a2 = f.mul(a, a);
  // a^(2+theta) + ab + b^theta,  a^(1+theta) + b
  const FieldElement c30 = f.add(f.add(f.mul(a2, ta), f.mul(a, b)), tb);
  const FieldElement c31 = f.add(f.mul(a, ta), b);
  return {1,     0,     0,     0,  //
          a.rep, 1,     0,     0,  //
          b.rep, ta.rep, 1,    0,  //
          c30.rep, c31.rep, a.rep, 1};
}

std::vector<Element> SuzukiGenerators::all() const {
  std::vector<Element> g = unipotent;
  g.push_back(torus);
  g.push_back(involution);
  return g;
}

SuzukiGenerators suzuki_generators(const SuzukiParams &params) {
  SuzukiParams::from_q(params.q);
  Field f = Field::of_order(params.q);
  auto carrier = std::make_shared<MatrixCarrier>(f, 4, false);
  SuzukiGenerators out{carrier, {}, {}, {}};
  out.unipotent.push_back(carrier->make(suzuki_unipotent(f, f.one(), f.zero())));
  out.unipotent.push_back(carrier->make(suzuki_unipotent(f, f.x(), f.zero())));
  const FieldElement k = f.primitive();
  const std::int64_t r = params.r;
  out.torus = carrier->make({f.pow(k, 1 + r).rep, 0, 0, 0,  //
                             0, f.pow(k, r).rep, 0, 0,      //
                             0, 0, f.pow(k, -r).rep, 0,     //
                             0, 0, 0, f.pow(k, -1 - r).rep});
  out.involution = carrier->make({0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0});
  return out;
}

namespace {

MutableGroupPtr build_uncached(const GroupSpec &spec, const ClosureOptions &options) {
  switch (spec.family) {
    case Family::S:
    case Family::A:
    case Family::D: {
      const std::size_t deg = std::max<std::uint32_t>(spec.n, 1);
      auto c = std::make_shared<PermutationCarrier>(deg);
      std::vector<Element> gens;
      std::vector<Word> full(spec.n);
      std::iota(full.begin(), full.end(), Word{0});
      if (spec.family == Family::S) {
        if (spec.n >= 2) gens.push_back(c->from_cycles({{0, 1}}));
        if (spec.n >= 3) gens.push_back(c->from_cycles({full}));
      } else if (spec.family == Family::A) {
        for (Word k = 2; k < spec.n; ++k) gens.push_back(c->from_cycles({{0, 1, k}}));
      } else {
        gens.push_back(c->from_cycles({full}));
        std::vector<std::vector<Word>> refl;
        for (Word i = 1; i < spec.n - i; ++i) refl.push_back({i, static_cast<Word>(spec.n - i)});
        gens.push_back(c->from_cycles(refl));
      }
      return Group::closure(c, gens, options);
    }
    case Family::Q8: {
      // Right regular representation on {±1, ±i, ±j, ±k}; point 4s+u is (-1)^s * unit u.
      static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
      static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      auto c = std::make_shared<PermutationCarrier>(8);
      auto right_mult = [&](int gu) {
        std::vector<Word> img(8);
        for (int s = 0; s < 2; ++s) {
          for (int u = 0; u < 4; ++u) {
            const int ns = s ^ sign[u][gu];
            img[4 * s + u] = static_cast<Word>(4 * ns + unit[u][gu]);
          }
        }
        return Element::permutation(img);
      };
      return Group::closure(c, {right_mult(1), right_mult(2)}, options);
    }
    case Family::GL:
    case Family::SL:
    case Family::PGL:
    case Family::PSL: {
      const bool proj = spec.family == Family::PGL || spec.family == Family::PSL;
      const bool general = spec.family == Family::GL || spec.family == Family::PGL;
      Field f = Field::of_order(spec.q);
      auto c = std::make_shared<MatrixCarrier>(f, spec.n, proj);
      const std::size_t d = spec.n;
      auto ident = [&]() {
        std::vector<std::uint32_t> m(d * d, 0);
        for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1;
        return m;
      };
      std::vector<Element> gens;
      if (general && spec.q > 2) {
        auto m = ident();
        m[0] = f.primitive().rep;
        gens.push_back(c->make(m));
      }
      // Root elements I + a E_{i,i+1}, I + a E_{i+1,i} with a over an additive basis.
      std::uint32_t basis = 1;
      for (std::uint32_t t = 0; t < f.degree(); ++t, basis *= f.characteristic()) {
        for (std::size_t i = 0; i + 1 < d; ++i) {
          auto up = ident();
          up[i * d + i + 1] = basis;
          gens.push_back(c->make(up));
          auto down = ident();
          down[(i + 1) * d + i] = basis;
          gens.push_back(c->make(down));
        }
      }
      return Group::closure(c, gens, options);
    }
    case Family::Sz: {
      auto gens = suzuki_generators(SuzukiParams::from_q(spec.q));
      return Group::closure(gens.carrier, gens.all(), options);
    }
    case Family::product:
      break;
  }
  throw IntegrityError("unreachable family");
}

CarrierPtr carrier_for(const GroupSpec &spec) {
  switch (spec.family) {
    case Family::S:
    case Family::A:
    case Family::D:
      return std::make_shared<PermutationCarrier>(std::max<std::uint32_t>(spec.n, 1));
    case Family::Q8: return std::make_shared<PermutationCarrier>(8);
    case Family::GL:
    case Family::SL:
      return std::make_shared<MatrixCarrier>(Field::of_order(spec.q), spec.n, false);
    case Family::PGL:
    case Family::PSL:
      return std::make_shared<MatrixCarrier>(Field::of_order(spec.q), spec.n, true);
    case Family::Sz: return suzuki_generators(SuzukiParams::from_q(spec.q)).carrier;
    case Family::product: break;
  }
  return nullptr;
}

}  // namespace

GroupPtr build(const GroupSpec &spec, const ClosureOptions &options,
               const std::optional<std::string> &cache_dir) {
  const std::uint64_t expected = spec.predicted_order();
  if (expected > options.element_cap) {
    throw ResourceLimit(spec.to_string() + " has order " + std::to_string(expected) +
                        ", above the element cap");
  }
  MutableGroupPtr g;
  if (spec.family == Family::product) {
    GroupPtr acc = build(spec.factors[0], options, cache_dir);
    for (std::size_t i = 1; i < spec.factors.size(); ++i) {
      g = direct_product(acc, build(spec.factors[i], options, cache_dir), options);
      acc = g;
    }
  } else if (cache_dir) {
    GroupCache cache(*cache_dir);
    auto carrier = carrier_for(spec);
    if (auto hit = cache.load(spec.to_string(), carrier, options)) {
      g = *hit;
    } else {
      g = build_uncached(spec, options);
      g->label = spec.to_string();
      cache.store(*g);
    }
  } else {
    g = build_uncached(spec, options);
  }
  if (g->order() != expected) {
    throw IntegrityError(spec.to_string() + " enumerated to order " + std::to_string(g->order()) +
                         ", expected " + std::to_string(expected));
  }
  g->label = spec.to_string();
  return g;
}

GroupPtr build(std::string_view spec, const ClosureOptions &options,
               const std::optional<std::string> &cache_dir) {
  return build(GroupSpec::parse(spec), options, cache_dir);
}

PermutationModel permutation_model(const GroupPtr &g, std::vector<Word> seed,
                                   bool allow_unfaithful) {
  const auto *mc = dynamic_cast<const MatrixCarrier *>(&g->carrier());
  if (!mc) throw InvalidArgument("permutation model needs a matrix group");
  if (seed.size() != mc->dim()) throw InvalidArgument("seed has the wrong dimension");
  if (std::all_of(seed.begin(), seed.end(), [](Word w) { return w == 0; })) {
    throw InvalidArgument("seed must be a nonzero vector");
  }
  mc->normalize_point(seed);

  PermutationModel out;
  out.orbit.push_back(seed);
  std::map<std::vector<Word>, Word> where{{seed, 0}};
  const auto &gens = g->generators();
  for (std::size_t head = 0; head < out.orbit.size(); ++head) {
    for (Index gen : gens) {
      auto img = mc->act_on_point(out.orbit[head], g->words(gen));
      if (where.count(img)) continue;
      if (out.orbit.size() >= 65535) throw ResourceLimit("orbit too large for a permutation model");
      where.emplace(img, static_cast<Word>(out.orbit.size()));
      out.orbit.push_back(std::move(img));
    }
  }
  auto pc = std::make_shared<PermutationCarrier>(out.orbit.size());
  std::vector<Element> perms;
  for (Index gen : gens) {
    std::vector<Word> img(out.orbit.size());
    for (std::size_t i = 0; i < out.orbit.size(); ++i) {
      img[i] = where.at(mc->act_on_point(out.orbit[i], g->words(gen)));
    }
    perms.push_back(Element::permutation(std::move(img)));
  }
  auto pg_mut = Group::closure(pc, perms);
  pg_mut->label = g->label + "[perm]";
  out.group = pg_mut;
  out.faithful = out.group->order() == g->order();
  if (!out.faithful) {
    if (!allow_unfaithful) {
      throw InvalidArgument("action on the orbit is not faithful (order " +
                            std::to_string(out.group->order()) + " vs " +
                            std::to_string(g->order()) + ")");
    }
    return out;
  }
  const auto &pg = out.group->generators();
  if (pg.size() != gens.size()) throw IntegrityError("generator images collapsed");
  for (Index x = 0; x < g->order(); ++x) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (out.group->mul(x, pg[k]) != g->mul(x, gens[k])) {
        throw IntegrityError("permutation model does not match the matrix enumeration");
      }
    }
  }
  return out;
}

}  // namespace nilgraph
