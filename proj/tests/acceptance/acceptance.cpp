// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "nilgraph/error.hpp"
#include "nilgraph/nilgraph.hpp"
#include "nilgraph/theorems.hpp"

using namespace nilgraph;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string failures(const VerificationReport &r) {
  std::string out;
  for (const auto &c : r.claims) {
    if (!c.pass && c.provenance != Provenance::conjecture) out += " " + c.claim;
  }
  return out.empty() ? "" : "failed:" + out;
}

Outcome suite_outcome(const VerificationReport &r) {
  Outcome o;
  o.pass = r.all_pass();
  o.detail = std::to_string(r.claims.size()) + " claims";
  if (!o.pass) o.detail += ", " + failures(r);
  return o;
}

Json omega_json(const Group &g, const SuiteOptions &opts) {
  const auto t = nilp_table(g, opts.nilgraph);
  const auto r = omega(g, t, opts.nilgraph);
  Json j;
  j["group"] = g.label;
  j["order"] = g.order();
  j["nilp"] = t.size();
  j["omega"] = r.omega;
  j["method"] = to_string(r.method);
  j["witness"] = r.witness;
  j["table"] = Json::parse(table_json(t));
  return j;
}

Outcome criterion1() {
  const auto g = build("A(5)");
  const auto t = nilp_table(*g);
  const auto r = omega(*g, t);
  return {r.omega == 21 && t.size() == 22,
          "omega " + std::to_string(r.omega) + ", |nilp| " + std::to_string(t.size())};
}

Outcome criterion2() {
  const auto r = omega(*build("PSL(2,7)"));
  return {r.omega == 57, "omega " + std::to_string(r.omega)};
}

Outcome criterion5() {
  const auto r = psl33_suite();
  Outcome o = suite_outcome(r);
  for (const auto &c : r.claims) {
    if (c.provenance == Provenance::conjecture) {
      o.detail += "; " + c.claim + " = " + c.computed.dump() + (c.pass ? " (matches)" : " (differs)");
    }
  }
  return o;
}

Outcome criterion6() {
  return suite_outcome(theorem3_classify(
      {"A(5)", "PSL(2,7)", "S(5)", "PGL(2,7)", "A(6)", "PSL(2,8)", "PSL(2,11)", "A(5)xA(5)"}));
}

Outcome criterion8() {
  const auto dir = std::filesystem::temp_directory_path() / "nilgraph-acceptance-cache";
  std::filesystem::remove_all(dir);
  struct Config {
    const char *name;
    unsigned jobs;
    bool cache;
  };
  const std::vector<Config> configs = {
      {"jobs=1 no-cache", 1, false}, {"jobs=4 no-cache", 4, false},
      {"jobs=1 cache-cold", 1, true}, {"jobs=4 cache-warm", 4, true}};
  std::vector<std::string> runs;
  for (const auto &c : configs) {
    SuiteOptions opts;
    opts.nilgraph.jobs = c.jobs;
    if (c.cache) opts.cache_dir = dir.string();
    Json all;
    all["pgl"] = pgl_suite({4, 7}, {4, 5}, opts).to_json(false);
    all["suzuki"] = suzuki_suite(8, opts).to_json(false);
    all["semisimple"] = theorem3_classify({"A(5)", "S(5)", "PSL(2,8)"}, opts).to_json(false);
    all["props"] = property_suite({"S(3)", "S(4)", "Q8"}, opts).to_json(false);
    for (const char *spec : {"PSL(3,3)", "S(3)xA(5)"}) {
      all["omega"].push_back(omega_json(*build(spec, opts.closure, opts.cache_dir), opts));
    }
    runs.push_back(all.dump());
  }
  std::filesystem::remove_all(dir);
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i] != runs[0]) {
      return {false, std::string(configs[i].name) + " differs from " + configs[0].name};
    }
  }
  return {true, std::to_string(configs.size()) + " configurations, " +
                    std::to_string(runs[0].size()) + " bytes each"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "A5 omega 21 and |nilp| 22", 5, criterion1},
      {2, "PSL(2,7) omega 57", 30, criterion2},
      {3, "PGL(2,q) and GL(2,q) omega", 600, [] { return suite_outcome(pgl_suite()); }},
      {4, "Sz(8) partition and omega 4161", 1800, [] { return suite_outcome(suzuki_suite(8)); }},
      {5, "PSL(3,3) nilpotentizer census and 1015 subset", 3600, criterion5},
      {6, "semisimple classification with omega <= 72", 3600, criterion6},
      {7, "property invariants", 900,
       [] { return suite_outcome(property_suite(default_property_corpus())); }},
      {8, "determinism across workers and cache modes", 3600, criterion8},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = seconds_since(t0);
    if (s >= c.limit_seconds) {
      o.pass = false;
      o.detail += ", over time limit";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", s, c.limit_seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ["
              << timing << "] " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
