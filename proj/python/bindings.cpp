// Python bindings: a thin layer over the library. Structured reports cross
// the boundary as JSON strings and are decoded in __init__.py; everything
// else maps to native types.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hansen/faces.hpp"
#include "hansen/families.hpp"
#include "hansen/graph.hpp"
#include "hansen/hanner.hpp"
#include "hansen/incidence.hpp"
#include "hansen/json_io.hpp"
#include "hansen/partition.hpp"

namespace py = pybind11;
using namespace hansen;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Graph graph_of(int n, const EdgeList& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SplitCert cert_of(const Graph& g) {
  auto cert = recognize_split(g);
  if (!cert) throw std::invalid_argument("graph is not split");
  return *cert;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hansen polytopes of split graphs (C++ core)";

  m.def(
      "count_faces",
      [](int n, const EdgeList& edges, bool assume_perfect,
         std::uint64_t budget) {
        Graph g = graph_of(n, edges);
        return enumerate_faces(build_incidence(g, assume_perfect), budget)
            .total;
      },
      py::arg("n"), py::arg("edges"), py::arg("assume_perfect") = false,
      py::arg("budget") = kDefaultFaceBudget,
      "Number of nonempty faces s(H(G)).");

  m.def(
      "f_vector",
      [](int n, const EdgeList& edges, bool assume_perfect,
         std::uint64_t budget) {
        Graph g = graph_of(n, edges);
        IncidenceStructure inc = build_incidence(g, assume_perfect);
        FaceCensus census = enumerate_faces(inc, budget);
        compute_f_vector(inc, census);
        return *census.fvec;
      },
      py::arg("n"), py::arg("edges"), py::arg("assume_perfect") = false,
      py::arg("budget") = kDefaultFaceBudget,
      "Exact f-vector (f_0, ..., f_d) of H(G).");

  m.def(
      "verify_json",
      [](int n, const EdgeList& edges, std::uint64_t budget, bool f_vector) {
        Graph g = graph_of(n, edges);
        SplitCert cert = cert_of(g);
        VerifyReport r = verify_main_theorem(g, cert, budget, f_vector);
        return report_to_json(r, graph_to_json(g, &cert)).dump();
      },
      py::arg("n"), py::arg("edges"),
      py::arg("budget") = kDefaultFaceBudget, py::arg("f_vector") = false,
      "Full verification report (counts, classes, identities) as JSON.");

  m.def(
      "classes_json",
      [](int n, const EdgeList& edges, std::uint64_t budget) {
        Graph g = graph_of(n, edges);
        SplitCert cert = cert_of(g);
        IncidenceStructure inc = build_incidence(g);
        FaceCensus census = enumerate_faces(inc, budget);
        classify_faces(inc, cert, census);
        return census_to_json(census).dump();
      },
      py::arg("n"), py::arg("edges"), py::arg("budget") = kDefaultFaceBudget,
      "Face census with class counts as JSON.");

  m.def(
      "p_g",
      [](int n, const EdgeList& edges) {
        Graph g = graph_of(n, edges);
        return count_pg(g, cert_of(g));
      },
      py::arg("n"), py::arg("edges"),
      "Partition invariant p_G (the excess of s over 3^d).");

  m.def(
      "is_split",
      [](int n, const EdgeList& edges) { return is_split(graph_of(n, edges)); },
      py::arg("n"), py::arg("edges"));

  m.def(
      "split_cert",
      [](int n, const EdgeList& edges)
          -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
        auto cert = recognize_split(graph_of(n, edges));
        if (!cert) return std::nullopt;
        return std::pair{set_to_vector(cert->clique),
                         set_to_vector(cert->stable)};
      },
      py::arg("n"), py::arg("edges"),
      "Canonical (clique, stable) partition, or None if not split.");

  m.def(
      "threshold_sequence",
      [](int n, const EdgeList& edges) -> std::optional<std::string> {
        auto seq = recognize_threshold(graph_of(n, edges));
        if (!seq) return std::nullopt;
        return seq_to_string(*seq);
      },
      py::arg("n"), py::arg("edges"),
      "Creation sequence over {I, D}, or None if not threshold.");

  m.def(
      "build_threshold",
      [](const std::string& seq) {
        Graph g = hansen::build_threshold(seq_from_string(seq));
        return std::pair{g.n, g.edges()};
      },
      py::arg("sequence"), "(n, edges) of the threshold graph of a sequence.");

  m.def(
      "hanner_f_vector",
      [](const std::string& seq) {
        return hanner_from_threshold(seq_from_string(seq));
      },
      py::arg("sequence"),
      "f-vector of H(build_threshold(sequence)) by the Hanner recursion.");

  m.def(
      "random_split",
      [](int k, int l, double p, std::uint64_t seed) {
        auto [g, cert] = hansen::random_split(k, l, p, seed);
        return py::make_tuple(g.n, g.edges(), set_to_vector(cert.clique),
                              set_to_vector(cert.stable));
      },
      py::arg("k"), py::arg("l"), py::arg("p"), py::arg("seed"),
      "Seeded random split graph: (n, edges, clique, stable).");

  m.def(
      "random_threshold_sequence",
      [](int m, std::uint64_t seed) {
        return seq_to_string(hansen::random_threshold_sequence(m, seed));
      },
      py::arg("m"), py::arg("seed"));
}
