// Command-line front end: nilgraph {info|omega|table|verify|export-graph} ...

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nilgraph/constructors.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/nilgraph.hpp"
#include "nilgraph/nilpotency.hpp"
#include "nilgraph/theorems.hpp"

using namespace nilgraph;

namespace {

enum Exit { ok = 0, failed = 1, input_error = 2, timeout = 3, io_error = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string out;
  std::string format;
  std::uint64_t budget = CliqueOptions{}.node_budget;
  std::string cache_dir;
  unsigned jobs = 1;
  bool no_cache = false;

  SuiteOptions suite() const {
    SuiteOptions o;
    o.nilgraph.jobs = jobs;
    o.nilgraph.clique.node_budget = budget;
    if (!no_cache) {
      if (!cache_dir.empty()) {
        o.cache_dir = cache_dir;
      } else if (const char *env = std::getenv("NILGRAPH_CACHE_DIR"); env && *env) {
        o.cache_dir = std::string(env);
      }
    }
    return o;
  }
};

void emit(const RunConfig &cfg, const std::string &text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw IoError("cannot open " + cfg.out + " for writing");
  f << text;
  if (!f) throw IoError("write to " + cfg.out + " failed");
}

double since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string render_text(const Json &j) {
  std::ostringstream os;
  for (const auto &[k, v] : j.items()) {
    os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return os.str();
}

std::string render(const RunConfig &cfg, const Json &j) {
  return cfg.format == "text" ? render_text(j) : j.dump(2) + "\n";
}

int cmd_info(const RunConfig &cfg, const std::string &spec) {
  const auto t = std::chrono::steady_clock::now();
  const auto o = cfg.suite();
  const auto g = build(spec, o.closure, o.cache_dir);
  Json j;
  j["group"] = GroupSpec::parse(spec).to_string();
  j["carrier"] = g->carrier().describe();
  j["order"] = g->order();
  j["generators"] = g->generators().size();
  j["classes"] = g->classes().count();
  j["center_size"] = center(*g).size();
  j["is_nilpotent"] = is_nilpotent(*g, g->all());
  j["is_solvable"] = is_solvable(*g, g->all());
  j["is_semisimple"] = is_semisimple(*g);
  j["is_ac_group"] = is_ac_group(*g);
  j["seconds"] = since(t);
  emit(cfg, render(cfg, j));
  return ok;
}

int cmd_omega(const RunConfig &cfg, const std::string &spec, bool noncommuting) {
  const auto t = std::chrono::steady_clock::now();
  const auto o = cfg.suite();
  const auto g = build(spec, o.closure, o.cache_dir);
  const Relation rel = noncommuting ? Relation::commuting : Relation::nilpotent;
  const auto table = relation_table(*g, rel, o.nilgraph);
  Json j;
  j["group"] = GroupSpec::parse(spec).to_string();
  j["graph"] = to_string(rel);
  j["order"] = g->order();
  j["table_size"] = table.size();
  try {
    const auto r = omega(*g, table, o.nilgraph);
    j["omega"] = r.omega;
    j["exact"] = true;
    j["method"] = to_string(r.method);
    j["witness"] = r.witness;
    j["seconds"] = since(t);
    emit(cfg, render(cfg, j));
    return ok;
  } catch (const SearchTimeout &e) {
    j["omega_lower_bound"] = e.lower_bound;
    j["exact"] = false;
    j["method"] = to_string(OmegaMethod::clique_search);
    j["witness"] = e.witness;
    j["seconds"] = since(t);
    emit(cfg, render(cfg, j));
    std::cerr << "error: " << e.what() << "\n";
    return timeout;
  }
}

int cmd_table(const RunConfig &cfg, const std::string &spec, bool noncommuting) {
  const auto o = cfg.suite();
  const auto g = build(spec, o.closure, o.cache_dir);
  const auto table =
      relation_table(*g, noncommuting ? Relation::commuting : Relation::nilpotent, o.nilgraph);
  emit(cfg, table_json(table) + "\n");
  return ok;
}

int cmd_verify(const RunConfig &cfg, const std::string &suite, std::uint32_t q,
               const std::vector<std::string> &corpus) {
  const auto o = cfg.suite();
  VerificationReport rep;
  if (suite == "suzuki") {
    rep = suzuki_suite(q, o);
  } else if (suite == "pgl") {
    rep = pgl_suite({4, 7, 8, 9}, {4, 5, 7}, o);
  } else if (suite == "psl33") {
    rep = psl33_suite(o);
  } else if (suite == "semisimple") {
    rep = theorem3_classify(corpus.empty() ? default_semisimple_corpus() : corpus, o);
  } else if (suite == "props") {
    rep = property_suite(corpus.empty() ? default_property_corpus() : corpus, o);
  } else {
    throw InvalidArgument("unknown suite: " + suite);
  }
  const Json j = rep.to_json();
  if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto &c : rep.claims) {
      os << (c.pass ? "PASS " : "FAIL ") << c.claim << "  expected " << c.expected.dump()
         << "  computed " << c.computed.dump() << "\n";
    }
    for (const auto &[id, why] : rep.out_of_scope) os << "SKIP " << id << "  " << why << "\n";
    os << (rep.all_pass() ? "all claims pass" : "some claims fail") << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, j.dump(2) + "\n");
  }
  return rep.all_pass() ? ok : failed;
}

int cmd_export(const RunConfig &cfg, const std::string &spec, const std::string &kind,
               bool quotient) {
  Relation rel;
  if (kind == "nonnilpotent") {
    rel = Relation::nilpotent;
  } else if (kind == "noncommuting") {
    rel = Relation::commuting;
  } else {
    throw InvalidArgument("unknown graph kind: " + kind);
  }
  const auto o = cfg.suite();
  const auto g = build(spec, o.closure, o.cache_dir);
  const auto table = relation_table(*g, rel, o.nilgraph);
  BitGraph graph;
  std::vector<Index> labels;
  if (quotient) {
    auto q = quotient_graph(table);
    for (auto e : q.entries) labels.push_back(table.entries[e].representative);
    graph = std::move(q.graph);
  } else {
    graph = full_graph(table);
    for (Index x = 0; x < g->order(); ++x) labels.push_back(x);
  }
  if (cfg.format == "json") {
    Json edges = Json::array();
    for (std::size_t u = 0; u < graph.size(); ++u) {
      for (std::size_t v = u + 1; v < graph.size(); ++v) {
        if (graph.adjacent(u, v)) edges.push_back({u, v});
      }
    }
    Json j{{"group", GroupSpec::parse(spec).to_string()},
           {"graph", to_string(rel)},
           {"quotient", quotient},
           {"vertices", graph.size()},
           {"vertex_elements", labels},
           {"edges", edges}};
    emit(cfg, j.dump(2) + "\n");
  } else {
    emit(cfg, export_dimacs(graph));
  }
  return ok;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Nilpotentizers and nonnilpotent graphs of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--out", cfg.out, "Output file (default: stdout)");
  app.add_option("--format", cfg.format, "Output format: json, dimacs or text")
      ->check(CLI::IsMember({"json", "dimacs", "text"}));
  app.add_option("--budget", cfg.budget, "Clique search node budget")->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir,
                 "Directory for cached group enumerations (default: $NILGRAPH_CACHE_DIR)");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  app.add_flag("--no-cache", cfg.no_cache, "Ignore any cache directory");

  std::string spec, suite, kind;
  bool noncommuting = false, quotient = false;
  std::uint32_t q = 8;
  std::vector<std::string> corpus;

  auto *info = app.add_subcommand("info", "Order, classes, centre and structural flags");
  info->add_option("spec", spec, "Group, e.g. A(5), PGL(2,7), S(3)xA(5), Sz(8)")->required();

  auto *om = app.add_subcommand("omega", "Clique number of the nonnilpotent graph");
  om->add_option("spec", spec)->required();
  om->add_flag("--noncommuting", noncommuting, "Use the noncommuting graph instead");

  auto *tb = app.add_subcommand("table", "Nilpotentizer table as JSON");
  tb->add_option("spec", spec)->required();
  tb->add_flag("--noncommuting", noncommuting, "Centralizers instead of nilpotentizers");

  auto *vf = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every claim passes");
  vf->add_option("suite", suite, "suzuki, pgl, psl33, semisimple or props")
      ->required()
      ->check(CLI::IsMember({"suzuki", "pgl", "psl33", "semisimple", "props"}));
  vf->add_option("--q", q, "Field size for the suzuki suite")->capture_default_str();
  vf->add_option("--corpus", corpus, "Group specs replacing the default corpus");

  auto *ex = app.add_subcommand("export-graph", "Write a graph in DIMACS (or JSON) form");
  ex->add_option("spec", spec)->required();
  ex->add_option("kind", kind, "nonnilpotent or noncommuting")
      ->required()
      ->check(CLI::IsMember({"nonnilpotent", "noncommuting"}));
  ex->add_flag("--quotient", quotient, "Collapse vertices with equal nilpotentizers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*info) return cmd_info(cfg, spec);
    if (*om) return cmd_omega(cfg, spec, noncommuting);
    if (*tb) return cmd_table(cfg, spec, noncommuting);
    if (*vf) return cmd_verify(cfg, suite, q, corpus);
    if (*ex) {
      if (cfg.format.empty()) cfg.format = "dimacs";
      return cmd_export(cfg, spec, kind, quotient);
    }
  } catch (const InvalidArgument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const ResourceLimit &e) {
    std::cerr << "error: " << e.what() << "\n";
    return timeout;
  } catch (const IoError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return io_error;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  }
  return input_error;
}
