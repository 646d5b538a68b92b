#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tonelab/bounds.hpp"
#include "tonelab/coloring.hpp"
#include "tonelab/constructions.hpp"
#include "tonelab/errors.hpp"
#include "tonelab/graph.hpp"
#include "tonelab/graph_io.hpp"
#include "tonelab/mols.hpp"
#include "tonelab/solver.hpp"
#include "tonelab/tree_schemes.hpp"

namespace py = pybind11;
using namespace tonelab;

namespace {

SearchBudget make_budget(std::uint64_t max_nodes, std::uint64_t max_millis) {
  SearchBudget b;
  b.max_nodes = max_nodes;
  b.max_millis = max_millis;
  return b;
}

template <class T, class Write>
std::string dump(const T& value, Write write) {
  std::ostringstream out;
  write(out, value);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_tonelab, m) {
  m.doc() = "t-tone colorings: graphs, verification, bounds, exact search and constructions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const HypothesisError& e) {
      // Raised before the generic invalid_argument mapping so callers can read `required`.
      py::object err = py::module_::import("builtins").attr("ValueError")(e.what());
      err.attr("required") = e.required();
      PyErr_SetObject(PyExc_ValueError, err.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges", &Graph::edges)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def_property_readonly("labels", &Graph::labels)
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             const auto s = g.neighbors(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def("adjacent", &Graph::adjacent)
      .def("is_connected", &Graph::is_connected)
      .def("components", &Graph::components)
      .def("induced_subgraph",
           [](const Graph& g, const std::vector<Vertex>& keep) { return g.induced_subgraph(keep); })
      .def("to_text", [](const Graph& g) { return dump(g, write_graph); })
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return read_graph(in);
                  })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) +
               ", edges=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("path", &build_path, py::arg("n"));
  m.def("star", &build_star, py::arg("k"));
  m.def("complete", &build_complete, py::arg("n"));
  m.def("complete_multipartite",
        [](const std::vector<int>& parts) { return build_complete_multipartite(parts); });
  m.def("cartesian_product", &cartesian_product);
  m.def("cartesian_power", &cartesian_power, py::arg("g"), py::arg("b"));
  m.def("regular_tree", &build_truncated_regular_tree, py::arg("delta"), py::arg("depth"));
  m.def("gnp", &build_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));

  py::class_<ToneColoring>(m, "ToneColoring")
      .def(py::init<int, int, std::vector<ColorSet>>(), py::arg("t"), py::arg("palette_size"),
           py::arg("sets"))
      .def_property_readonly("t", &ToneColoring::t)
      .def_property_readonly("palette_size", &ToneColoring::palette_size)
      .def_property_readonly("sets", &ToneColoring::sets)
      .def("colors", &ToneColoring::colors)
      .def("to_text", [](const ToneColoring& c) { return to_string(c); })
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return read_coloring(in);
                  })
      .def("__eq__", [](const ToneColoring& a, const ToneColoring& b) { return a == b; });

  py::class_<Violation>(m, "Violation")
      .def_readonly("u", &Violation::u)
      .def_readonly("v", &Violation::v)
      .def_readonly("distance", &Violation::distance)
      .def_readonly("shared", &Violation::shared);
  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("valid", &VerificationReport::valid)
      .def_readonly("violations", &VerificationReport::violations)
      .def_readonly("colors_used", &VerificationReport::colors_used)
      .def("__bool__", [](const VerificationReport& r) { return r.valid; });

  m.def("verify", py::overload_cast<const Graph&, const ToneColoring&>(&verify));
  m.def("colors_used", &colors_used);
  m.def("compact_palette", &compact_palette);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("value", &BoundReport::value)
      .def_property_readonly("kind", [](const BoundReport& b) { return to_string(b.kind); })
      .def_readonly("source", &BoundReport::source)
      .def_readonly("applicable", &BoundReport::applicable)
      .def_readonly("reason", &BoundReport::reason);
  m.def("degree_lower_bound", &degree_lower_bound, py::arg("delta"), py::arg("t"));
  m.def("path_formula", &path_formula, py::arg("n"), py::arg("t"));
  m.def("tree2tone_formula", &tree2tone_formula, py::arg("delta"));
  m.def("star_formula", &star_formula, py::arg("k"), py::arg("t"));
  m.def("pairsum_bound", &pairsum_bound, py::arg("g"), py::arg("t"));
  m.def("bound_table", &bound_table, py::arg("g"), py::arg("t"));

  py::class_<SearchStats>(m, "SearchStats")
      .def_readonly("nodes", &SearchStats::nodes)
      .def_readonly("wall_millis", &SearchStats::wall_millis)
      .def_readonly("budget_exhausted", &SearchStats::budget_exhausted);
  py::class_<FeasibilityResult>(m, "FeasibilityResult")
      .def_property_readonly("verdict",
                             [](const FeasibilityResult& r) { return to_string(r.verdict); })
      .def_readonly("witness", &FeasibilityResult::witness)
      .def_readonly("stats", &FeasibilityResult::stats);
  py::class_<SolveOutcome>(m, "SolveOutcome")
      .def_property_readonly("status", [](const SolveOutcome& r) { return to_string(r.status); })
      .def_readonly("lower", &SolveOutcome::lower)
      .def_readonly("upper", &SolveOutcome::upper)
      .def_readonly("witness", &SolveOutcome::witness)
      .def_readonly("stats", &SolveOutcome::stats)
      .def_property_readonly("value", &SolveOutcome::value);

  constexpr std::uint64_t kNodes = SearchBudget{}.max_nodes;
  constexpr std::uint64_t kMillis = SearchBudget{}.max_millis;
  m.def(
      "feasible",
      [](const Graph& g, int t, int k, std::uint64_t max_nodes, std::uint64_t max_millis,
         int threads) {
        const auto budget = make_budget(max_nodes, max_millis);
        py::gil_scoped_release release;
        return feasible(g, t, k, budget, threads);
      },
      py::arg("g"), py::arg("t"), py::arg("k"), py::arg("max_nodes") = kNodes,
      py::arg("max_millis") = kMillis, py::arg("threads") = 1);
  m.def(
      "tau_exact",
      [](const Graph& g, int t, std::uint64_t max_nodes, std::uint64_t max_millis, int threads) {
        const auto budget = make_budget(max_nodes, max_millis);
        py::gil_scoped_release release;
        return tau_exact(g, t, budget, threads);
      },
      py::arg("g"), py::arg("t"), py::arg("max_nodes") = kNodes, py::arg("max_millis") = kMillis,
      py::arg("threads") = 1);
  m.def("brute_force_tau", &brute_force_tau, py::arg("g"), py::arg("t"), py::arg("k_max"));

  m.def("greedy_large_t_coloring", &greedy_large_t_coloring, py::arg("g"), py::arg("t"));
  m.def(
      "two_tone_via_decomposition",
      [](const Graph& g) {
        auto r = two_tone_via_decomposition(g);
        return py::make_tuple(r.coloring, r.certificate.bound);
      },
      py::arg("g"));
  m.def("star_coloring", &star_coloring, py::arg("k"), py::arg("t"));
  m.def(
      "multipartite_coloring",
      [](const std::vector<int>& parts, int t) { return multipartite_coloring(parts, t); },
      py::arg("parts"), py::arg("t"));
  m.def("greedy_heuristic_coloring", &greedy_heuristic_coloring, py::arg("g"), py::arg("t"),
        py::arg("palette_cap"));

  py::class_<MolsFamily>(m, "MolsFamily")
      .def_property_readonly("order", &MolsFamily::order)
      .def_property_readonly("size", &MolsFamily::size)
      .def_property_readonly("verified", &MolsFamily::verified)
      .def("square", [](const MolsFamily& f, int i) { return f.square(i).rows(); })
      .def("to_text", [](const MolsFamily& f) { return dump(f, write_mols); });
  m.def("is_latin", &is_latin);
  m.def("prime_mols", &prime_mols, py::arg("p"));
  m.def("macneish_product", &macneish_product);
  m.def("mols_for_order", &mols_for_order, py::arg("n"));
  m.def("mols_coloring_knn", &mols_coloring_knn, py::arg("family"), py::arg("t"));

  m.def(
      "tree_scheme_coloring",
      [](const std::string& name, int depth) {
        auto st = tree_scheme_coloring(parse_tree_scheme(name), depth);
        return py::make_tuple(std::move(st.tree), std::move(st.coloring));
      },
      py::arg("scheme"), py::arg("depth"));
}
