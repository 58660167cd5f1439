#include "nilgraph/nilpotency.hpp"

#include <map>

#include "nilgraph/error.hpp"
#include "nilgraph/parallel.hpp"

namespace nilgraph {

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool commute(const Group &g, Index a, Index b) { return g.mul(a, b) == g.mul(b, a); }

// Whether <a, b> is a p-group; gives up once it outgrows `bound` elements or
// meets an element whose order is not a power of p.
bool generates_p_group(const Group &g, Index a, Index b, std::uint64_t p, std::uint64_t bound) {
  thread_local std::vector<std::uint8_t> mark;
  thread_local std::vector<Index> list;
  if (mark.size() < g.order()) mark.assign(g.order(), 0);
  list.clear();
  list.push_back(0);
  mark[0] = 1;
  bool ok = true;
  const Index gens[2] = {a, b};
  for (std::size_t head = 0; ok && head < list.size(); ++head) {
    for (Index s : gens) {
      const Index z = g.mul(list[head], s);
      if (mark[z]) continue;
      if (!is_power_of(g.element_order(z), p) || list.size() + 1 > bound) {
        ok = false;
        break;
      }
      mark[z] = 1;
      list.push_back(z);
    }
  }
  for (Index x : list) mark[x] = 0;
  return ok;
}

struct PrimePart {
  std::uint64_t prime;
  Index element;
};

std::vector<PrimePart> prime_parts(const Group &g, Index x) {
  const std::uint64_t n = g.element_order(x);
  std::vector<PrimePart> out;
  for (auto [p, e] : factorize(n)) {
    out.push_back({p, g.pow(x, static_cast<std::int64_t>(n / p_part(n, p)))});
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

ElementSet p_elements(const Group &g, const ElementSet &h, std::uint64_t p) {
  ElementSet out(g.order());
  h.for_each([&](Index x) {
    if (is_power_of(g.element_order(x), p)) out.insert(x);
  });
  return out;
}

bool is_nilpotent(const Group &g, const ElementSet &h) {
  if (!is_subgroup(g, h)) throw InvalidArgument("nilpotency test needs a subgroup");
  std::map<std::uint64_t, std::vector<Index>> by_prime;
  h.for_each([&](Index x) {
    const auto f = factorize(g.element_order(x));
    if (f.size() == 1) by_prime[f[0].first].push_back(x);
  });
  for (auto it = by_prime.begin(); it != by_prime.end(); ++it) {
    for (auto jt = std::next(it); jt != by_prime.end(); ++jt) {
      for (Index x : it->second) {
        for (Index y : jt->second) {
          if (!commute(g, x, y)) return false;
        }
      }
    }
  }
  return true;
}

ElementSet normal_closure(const Group &g, const std::vector<Index> &ambient_gens,
                          const std::vector<Index> &seeds) {
  std::vector<Index> gens;
  for (Index s : seeds) {
    if (s != 0) gens.push_back(s);
  }
  ElementSet s = g.generate(gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Index a : ambient_gens) {
      const Index c = g.conj(gens[i], a);
      if (s.contains(c)) continue;
      gens.push_back(c);
      s = g.generate(gens);
    }
  }
  return s;
}

CentralSeries lower_central_series(const Group &g, const ElementSet &h) {
  const auto hgens = generating_set(g, h);
  CentralSeries series;
  series.terms.push_back(h);
  while (true) {
    const ElementSet &cur = series.terms.back();
    if (cur.size() == 1) {
      series.stabilized = true;
      break;
    }
    std::vector<Index> seeds;
    for (Index x : generating_set(g, cur)) {
      for (Index y : hgens) seeds.push_back(g.comm(x, y));
    }
    ElementSet next = normal_closure(g, hgens, seeds);
    if (next == cur) {
      series.stabilized = true;
      break;
    }
    series.terms.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent_by_lower_central_series(const Group &g, const ElementSet &h) {
  return lower_central_series(g, h).last().size() == 1;
}

bool two_gen_nilpotent(const Group &g, Index a, Index b) {
  if (a >= g.order() || b >= g.order()) throw InvalidArgument("element index out of range");
  if (a == 0 || b == 0 || a == b || commute(g, a, b)) return true;
  const auto pa = prime_parts(g, a);
  const auto pb = prime_parts(g, b);
  for (const auto &x : pa) {
    for (const auto &y : pb) {
      if (x.prime != y.prime && !commute(g, x.element, y.element)) return false;
    }
  }
  for (const auto &x : pa) {
    for (const auto &y : pb) {
      if (x.prime != y.prime || commute(g, x.element, y.element)) continue;
      if (!generates_p_group(g, x.element, y.element, x.prime, p_part(g.order(), x.prime))) {
        return false;
      }
    }
  }
  return true;
}

bool two_gen_nilpotent(const Group &g, const Element &a, const Element &b) {
  return two_gen_nilpotent(g, g.index_of(a), g.index_of(b));
}

CentralSeries hypercenter(const Group &g) {
  CentralSeries series;
  series.terms.push_back(g.generate({}));
  while (true) {
    const ElementSet &cur = series.terms.back();
    ElementSet next(g.order());
    for (Index x = 0; x < g.order(); ++x) {
      bool central = true;
      for (Index s : g.generators()) {
        if (!cur.contains(g.comm(x, s))) {
          central = false;
          break;
        }
      }
      if (central) next.insert(x);
    }
    if (next == cur) break;
    series.terms.push_back(std::move(next));
  }
  series.stabilized = true;
  return series;
}

EngelReport right_engel_set(const Group &g, std::optional<std::size_t> depth_cap, unsigned jobs) {
  const std::size_t cap = depth_cap.value_or(g.order());
  const auto &classes = g.classes();
  const std::size_t nreps = classes.count();
  struct Verdict {
    bool engel = true;
    bool exact = true;
    std::size_t depth = 0;
  };
  std::vector<Verdict> verdicts(nreps);

  parallel_for(nreps, jobs, [&](std::size_t c) {
    const Index x = classes.representatives[c];
    Verdict v;
    for (Index y = 0; y < g.order() && v.engel; ++y) {
      // Brent cycle detection on c -> [c, y]; the identity is a fixed point.
      Index hare = x, tortoise = x;
      std::size_t power = 1, lam = 0, steps = 0;
      while (true) {
        if (hare == 0) {
          v.depth = std::max(v.depth, steps);
          break;
        }
        if (steps >= cap) {
          v.exact = false;
          break;
        }
        if (power == lam) {
          tortoise = hare;
          power *= 2;
          lam = 0;
        }
        hare = g.comm(hare, y);
        ++lam;
        ++steps;
        if (hare != 0 && hare == tortoise) {
          v.engel = false;
          break;
        }
      }
    }
    verdicts[c] = v;
  });

  EngelReport report{ElementSet(g.order()), 0, true};
  for (std::size_t c = 0; c < nreps; ++c) {
    report.exact = report.exact && verdicts[c].exact;
    if (!verdicts[c].engel) continue;
    report.max_depth_used = std::max(report.max_depth_used, verdicts[c].depth);
    for (Index m : classes.members[c]) report.right_engel.insert(m);
  }
  return report;
}

std::vector<ElementSet> derived_series(const Group &g, const ElementSet &h) {
  std::vector<ElementSet> series{h};
  while (series.back().size() > 1) {
    const auto gens = generating_set(g, series.back());
    std::vector<Index> seeds;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(g.comm(gens[i], gens[j]));
    }
    ElementSet next = normal_closure(g, gens, seeds);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const Group &g, const ElementSet &h) {
  if (!is_subgroup(g, h)) throw InvalidArgument("solvability test needs a subgroup");
  return derived_series(g, h).back().size() == 1;
}

}  // namespace nilgraph
