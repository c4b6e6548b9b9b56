#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rig/coloring.hpp"
#include "rig/errors.hpp"
#include "rig/experiments.hpp"
#include "rig/graph_core.hpp"
#include "rig/hyperbolicity.hpp"
#include "rig/io.hpp"
#include "rig/model.hpp"
#include "rig/sparsity.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "random intersection graph toolkit";

  py::register_exception<rig::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<rig::InvalidQuery>(m, "InvalidQuery", PyExc_ValueError);

  py::class_<rig::BipartiteGraph>(m, "BipartiteGraph")
      .def_readonly("n", &rig::BipartiteGraph::n)
      .def_readonly("m", &rig::BipartiteGraph::m)
      .def("num_incidences", &rig::BipartiteGraph::num_incidences)
      .def("attr_nodes", [](const rig::BipartiteGraph& b, int a) { return b.attr_nodes.at(a); })
      .def("node_attrs", [](const rig::BipartiteGraph& b, int v) { return b.node_attrs.at(v); });

  py::class_<rig::Graph>(m, "Graph")
      .def_readonly("n", &rig::Graph::n)
      .def_readonly("edge_count", &rig::Graph::edge_count)
      .def("neighbors", [](const rig::Graph& g, int v) { return g.adj.at(v); })
      .def("degree", &rig::Graph::degree)
      .def_static("from_edges", &rig::Graph::from_edges, py::arg("n"), py::arg("edges"));

  m.def(
      "sample_bipartite",
      [](int n, int mm, double p, std::uint64_t seed) {
        return rig::sample_bipartite(rig::make_params(n, mm, p, seed));
      },
      py::arg("n"), py::arg("m"), py::arg("p"), py::arg("seed") = 0);
  m.def(
      "sample_scaled",
      [](double alpha, double beta, double gamma, int n, std::uint64_t seed) {
        return rig::sample_bipartite(rig::derive_params(alpha, beta, gamma, n, seed));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("n"), py::arg("seed") = 0);
  m.def("project", &rig::project, py::arg("b"));

  m.def("degeneracy",
        [](const rig::Graph& g) { return rig::core_decomposition(g).degeneracy; });
  m.def("densest_subgraph", [](const rig::Graph& g) {
    rig::DensestSubgraphResult r = rig::densest_subgraph(g);
    return py::make_tuple(r.density.num, r.density.den, r.witness);
  });
  m.def(
      "four_point_delta",
      [](const rig::Graph& g, std::optional<int> component, int size_cap) {
        return rig::four_point_delta(g, component, size_cap).value();
      },
      py::arg("g"), py::arg("component") = std::nullopt, py::arg("size_cap") = 600);
  m.def("find_k_special_paths", [](const rig::Graph& g) {
    py::list out;
    for (const rig::SpecialPath& p : rig::find_k_special_paths(g))
      out.append(py::make_tuple(p.k, p.vertices, p.closed));
    return out;
  });

  m.def(
      "low_tw_coloring",
      [](const rig::Graph& g, int k) { return rig::to_json(rig::low_tw_coloring(g, k)).dump(); },
      py::arg("g"), py::arg("k"));
  m.def(
      "verify_coloring",
      [](const rig::Graph& g, const std::string& coloring_json, int samples, int size_cap,
         std::uint64_t seed) {
        rig::ColoringResult stored = rig::coloring_from_json(nlohmann::json::parse(coloring_json));
        nlohmann::json arr = nlohmann::json::array();
        for (const rig::VerificationRecord& rec :
             rig::verify_coloring(g, stored, samples, size_cap, seed))
          arr.push_back(rig::to_json(rec));
        return arr.dump();
      },
      py::arg("g"), py::arg("coloring_json"), py::arg("samples") = 100, py::arg("size_cap") = 30,
      py::arg("seed") = 0);

  m.def(
      "sparsity_report",
      [](const rig::Graph& g, const rig::BipartiteGraph* b) {
        return rig::to_json(rig::sparsity_report(g, b)).dump();
      },
      py::arg("g"), py::arg("b") = nullptr);
  m.def(
      "hyperbolicity_report",
      [](const rig::Graph& g, int size_cap) {
        return rig::to_json(rig::hyperbolicity_report(g, size_cap)).dump();
      },
      py::arg("g"), py::arg("size_cap") = 600);

  m.attr("__version__") = rig::kCodeVersion;
}
