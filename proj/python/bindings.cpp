#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "nilgraph/constructors.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/nilgraph.hpp"
#include "nilgraph/nilpotency.hpp"
#include "nilgraph/theorems.hpp"

namespace py = pybind11;
using namespace nilgraph;

namespace {

Relation relation_of(const std::string &graph) {
  if (graph == "nonnilpotent") return Relation::nilpotent;
  if (graph == "noncommuting") return Relation::commuting;
  throw InvalidArgument("graph must be 'nonnilpotent' or 'noncommuting'");
}

SuiteOptions suite_options(unsigned jobs, std::optional<std::string> cache_dir,
                           std::uint64_t budget = CliqueOptions{}.node_budget) {
  SuiteOptions o;
  o.nilgraph.jobs = jobs;
  o.nilgraph.clique.node_budget = budget;
  o.cache_dir = std::move(cache_dir);
  return o;
}

GroupPtr build_group(const std::string &spec, const SuiteOptions &o) {
  return build(spec, o.closure, o.cache_dir);
}

std::string info(const std::string &spec, std::optional<std::string> cache_dir) {
  const auto g = build_group(spec, suite_options(1, std::move(cache_dir)));
  Json j;
  j["group"] = GroupSpec::parse(spec).to_string();
  j["carrier"] = g->carrier().describe();
  j["order"] = g->order();
  j["classes"] = g->classes().count();
  j["center_size"] = center(*g).size();
  j["is_nilpotent"] = is_nilpotent(*g, g->all());
  j["is_solvable"] = is_solvable(*g, g->all());
  j["is_semisimple"] = is_semisimple(*g);
  j["is_ac_group"] = is_ac_group(*g);
  return j.dump();
}

std::string omega_of(const std::string &spec, const std::string &graph, unsigned jobs,
                     std::optional<std::string> cache_dir, std::uint64_t budget) {
  const auto o = suite_options(jobs, std::move(cache_dir), budget);
  const auto g = build_group(spec, o);
  const auto rel = relation_of(graph);
  const auto t = rel == Relation::nilpotent ? nilp_table(*g, o.nilgraph)
                                            : centralizer_table(*g, o.nilgraph);
  const auto r = omega(*g, t, o.nilgraph);
  Json j;
  j["group"] = GroupSpec::parse(spec).to_string();
  j["graph"] = to_string(rel);
  j["order"] = g->order();
  j["table_size"] = t.size();
  j["omega"] = r.omega;
  j["method"] = to_string(r.method);
  j["witness"] = r.witness;
  return j.dump();
}

std::string table(const std::string &spec, const std::string &graph, unsigned jobs,
                  std::optional<std::string> cache_dir) {
  const auto o = suite_options(jobs, std::move(cache_dir));
  const auto g = build_group(spec, o);
  const auto rel = relation_of(graph);
  return table_json(rel == Relation::nilpotent ? nilp_table(*g, o.nilgraph)
                                               : centralizer_table(*g, o.nilgraph));
}

std::string export_graph(const std::string &spec, const std::string &graph, bool quotient,
                         unsigned jobs) {
  const auto o = suite_options(jobs, std::nullopt);
  const auto g = build_group(spec, o);
  const auto rel = relation_of(graph);
  const auto t = rel == Relation::nilpotent ? nilp_table(*g, o.nilgraph)
                                            : centralizer_table(*g, o.nilgraph);
  return export_dimacs(quotient ? quotient_graph(t).graph : full_graph(t));
}

std::string verify(const std::string &suite, std::optional<std::uint32_t> q,
                   std::optional<std::vector<std::string>> corpus, unsigned jobs,
                   std::optional<std::string> cache_dir, bool with_timing) {
  const auto o = suite_options(jobs, std::move(cache_dir));
  VerificationReport r;
  if (suite == "suzuki") {
    r = suzuki_suite(q.value_or(8), o);
  } else if (suite == "pgl") {
    r = q ? pgl_suite({*q}, {*q}, o) : pgl_suite({4, 7, 8, 9}, {4, 5, 7}, o);
  } else if (suite == "psl33") {
    r = psl33_suite(o);
  } else if (suite == "semisimple") {
    r = theorem3_classify(corpus.value_or(default_semisimple_corpus()), o);
  } else if (suite == "props") {
    r = property_suite(corpus.value_or(default_property_corpus()), o);
  } else {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }
  return r.to_json(with_timing).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Nilpotentizers, nonnilpotent graphs and clique numbers of finite groups";

  static py::exception<InvalidArgument> invalid(m, "InvalidArgument", PyExc_ValueError);
  static py::exception<ResourceLimit> limit(m, "ResourceLimit", PyExc_RuntimeError);
  static py::exception<IntegrityError> integrity(m, "IntegrityError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument &e) {
      py::set_error(invalid, e.what());
    } catch (const ResourceLimit &e) {
      py::set_error(limit, e.what());
    } catch (const IntegrityError &e) {
      py::set_error(integrity, e.what());
    }
  });

  const std::uint64_t default_budget = CliqueOptions{}.node_budget;
  m.def("info", &info, py::arg("spec"), py::arg("cache_dir") = py::none());
  m.def("omega", &omega_of, py::arg("spec"), py::arg("graph") = "nonnilpotent",
        py::arg("jobs") = 1, py::arg("cache_dir") = py::none(),
        py::arg("budget") = default_budget, py::call_guard<py::gil_scoped_release>());
  m.def("table", &table, py::arg("spec"), py::arg("graph") = "nonnilpotent",
        py::arg("jobs") = 1, py::arg("cache_dir") = py::none(),
        py::call_guard<py::gil_scoped_release>());
  m.def("export_graph", &export_graph, py::arg("spec"), py::arg("graph") = "nonnilpotent",
        py::arg("quotient") = false, py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("verify", &verify, py::arg("suite"), py::arg("q") = py::none(),
        py::arg("corpus") = py::none(), py::arg("jobs") = 1, py::arg("cache_dir") = py::none(),
        py::arg("with_timing") = true, py::call_guard<py::gil_scoped_release>());
  m.def("suzuki_omega_formula", &theorem1_formula, py::arg("q"));
  m.def("suzuki_nilp_count", &corollary_nilp_suzuki, py::arg("q"));
  m.def("is_semisimple", [](const std::string &spec) { return is_semisimple(*build(spec)); },
        py::arg("spec"));
  m.def("is_ac_group", [](const std::string &spec) { return is_ac_group(*build(spec)); },
        py::arg("spec"));
  m.def("order", [](const std::string &spec) { return build(spec)->order(); }, py::arg("spec"));
}
