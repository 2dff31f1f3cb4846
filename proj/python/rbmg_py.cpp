#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rbmg/bench.hpp"
#include "rbmg/errors.hpp"
#include "rbmg/graph_io.hpp"
#include "rbmg/recognize.hpp"
#include "rbmg/solve.hpp"
#include "rbmg/tree.hpp"

namespace py = pybind11;
using namespace rbmg;

namespace {

EditMode mode_from(const std::string& name) {
  if (name == "delete" || name == "deletion") return EditMode::deletion;
  if (name == "edit" || name == "editing") return EditMode::editing;
  if (name == "complete" || name == "completion") return EditMode::completion;
  throw py::value_error("unknown mode '" + name + "' (expected delete, edit or complete)");
}

GraphClass class_from(const std::string& name) {
  const auto cls = parse_graph_class(name);
  if (!cls) throw py::value_error("unknown graph class '" + name + "'");
  return *cls;
}

Target target_from(const std::string& name) {
  const auto t = parse_target(name);
  if (!t) throw py::value_error("unknown target '" + name + "'");
  return *t;
}

std::vector<std::pair<Vertex, Vertex>> as_tuples(std::span<const VertexPair> pairs) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.emplace_back(p.first, p.second);
  return out;
}

ColoredGraph make_graph(std::vector<ColorId> colors, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<VertexPair> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) es.push_back(VertexPair::of(a, b));
  return ColoredGraph(std::move(colors), std::move(es));
}

}  // namespace

PYBIND11_MODULE(rbmg, m) {
  m.doc() = "Colored best match graphs: recognition, modification and tree tools.";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ImproperColoringError>(m, "ImproperColoringError", PyExc_ValueError);
  py::register_exception<InstanceTooLargeError>(m, "InstanceTooLargeError", PyExc_RuntimeError);

  py::class_<ColoredGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("colors"), py::arg("edges"),
           "Graph on len(colors) vertices; colors are renumbered by first appearance.")
      .def_static("parse", py::overload_cast<std::string_view>(&parse_graph), py::arg("text"))
      .def("to_text", &format_graph)
      .def_property_readonly("vertex_count", &ColoredGraph::vertex_count)
      .def_property_readonly("edge_count", &ColoredGraph::edge_count)
      .def_property_readonly("color_count", &ColoredGraph::color_count)
      .def_property_readonly("colors", [](const ColoredGraph& g) { return std::vector<ColorId>(g.colors().begin(), g.colors().end()); })
      .def_property_readonly("edges", [](const ColoredGraph& g) { return as_tuples(g.edges()); })
      .def("vertex_name", &ColoredGraph::vertex_name, py::arg("v"))
      .def("has_edge", &ColoredGraph::has_edge, py::arg("a"), py::arg("b"))
      .def("is_properly_colored", &ColoredGraph::is_properly_colored)
      .def(py::self == py::self)
      .def("__repr__", [](const ColoredGraph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) +
               " colors=" + std::to_string(g.color_count()) + ">";
      });

  py::class_<PhylogeneticTree>(m, "Tree")
      .def_static("parse", &parse_newick, py::arg("newick"))
      .def("to_newick", &format_newick)
      .def_property_readonly("leaf_count", &PhylogeneticTree::leaf_count)
      .def_property_readonly("color_count", &PhylogeneticTree::color_count)
      .def("__repr__", [](const PhylogeneticTree& t) { return "<Tree " + format_newick(t) + ">"; });

  py::class_<RecognitionReport>(m, "Report")
      .def_readonly("verdict", &RecognitionReport::verdict)
      .def_property_readonly("graph_class", [](const RecognitionReport& r) { return std::string(to_string(r.graph_class)); })
      .def("__bool__", [](const RecognitionReport& r) { return r.verdict; });

  m.def(
      "recognize",
      [](const ColoredGraph& g, const std::string& cls, std::size_t oracle_cap) {
        return recognize(g, class_from(cls), oracle_cap);
      },
      py::arg("graph"), py::arg("graph_class"), py::arg("oracle_cap") = kDefaultEnumerationCap,
      "Decide membership in one of: bicluster, 2rbmg, cograph, hc-cograph, rbmg-oracle, nrbmg.");
  m.def(
      "certificate_text",
      [](const ColoredGraph& g, const RecognitionReport& r) { return format_certificate(g, r.certificate); },
      py::arg("graph"), py::arg("report"));
  m.def(
      "verify_certificate",
      [](const ColoredGraph& g, const RecognitionReport& r) { return verify_certificate(g, r); },
      py::arg("graph"), py::arg("report"));

  py::class_<SolveResult>(m, "SolveResult")
      .def_property_readonly("status", [](const SolveResult& r) { return std::string(to_string(r.status)); })
      .def_property_readonly("size", [](const SolveResult& r) -> std::optional<std::size_t> {
        if (r.status != SolveStatus::solved) return std::nullopt;
        return r.optimal_size;
      })
      .def_property_readonly("mode", [](const SolveResult& r) { return std::string(to_string(r.witness.mode())); })
      .def_property_readonly("witness", [](const SolveResult& r) { return as_tuples(r.witness.pairs()); })
      .def_property_readonly("nodes_expanded", [](const SolveResult& r) { return r.stats.nodes_expanded; })
      .def_property_readonly("reductions_applied", [](const SolveResult& r) { return r.stats.reductions_applied; })
      .def_property_readonly("wall_seconds", [](const SolveResult& r) { return r.stats.wall_seconds; })
      .def("apply", [](const SolveResult& r, const ColoredGraph& g) { return apply_edits(g, r.witness); },
           py::arg("graph"), "The graph modified by the witness.");

  m.def(
      "solve",
      [](const ColoredGraph& g, const std::string& target, const std::string& mode, std::optional<std::size_t> k_max,
         unsigned threads, std::size_t oracle_cap) {
        SolveConfig cfg;
        cfg.target = target_from(target);
        cfg.mode = mode_from(mode);
        cfg.k_max = k_max;
        cfg.threads = threads;
        cfg.oracle_cap = oracle_cap;
        py::gil_scoped_release release;
        return solve(g, cfg);
      },
      py::arg("graph"), py::arg("target"), py::arg("mode") = "edit", py::arg("k_max") = py::none(),
      py::arg("threads") = 1, py::arg("oracle_cap") = kDefaultEnumerationCap,
      "Minimum modification to bicluster, 2rbmg, hc-cograph or nrbmg.");

  m.def(
      "tree_to_graph",
      [](const PhylogeneticTree& t, const std::string& relation) {
        if (relation == "rbmg") return best_match_graph_symmetric(t);
        if (relation == "orthology") return orthology_graph(t);
        throw py::value_error("unknown relation '" + relation + "' (expected rbmg or orthology)");
      },
      py::arg("tree"), py::arg("relation") = "rbmg");

  m.def(
      "random_tree",
      [](std::size_t leaves, std::size_t colors, std::uint64_t seed, std::optional<double> speciation) {
        GenSpec spec;
        spec.vertices = leaves;
        spec.colors = colors;
        spec.seed = seed;
        spec.speciation_probability = speciation;
        return random_tree(spec);
      },
      py::arg("leaves"), py::arg("colors"), py::arg("seed"), py::arg("speciation") = py::none());
  m.def(
      "random_graph",
      [](std::size_t vertices, std::size_t colors, std::uint64_t seed, double edge_probability) {
        GenSpec spec;
        spec.kind = GenSpec::Kind::random_colored_graph;
        spec.vertices = vertices;
        spec.colors = colors;
        spec.seed = seed;
        spec.edge_probability = edge_probability;
        return random_colored_graph(spec);
      },
      py::arg("vertices"), py::arg("colors"), py::arg("seed"), py::arg("edge_probability") = 0.5);
  m.def("perturb", &perturb, py::arg("graph"), py::arg("flips"), py::arg("seed"));
}
