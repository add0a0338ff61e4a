#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hansen/faces.hpp"
#include "hansen/graph.hpp"
#include "hansen/incidence.hpp"
#include "hansen/partition.hpp"

namespace hansen {

// ordered_json keeps key insertion order, so serialized reports are
// byte-stable across runs.
using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"n": int, "edges": [[u,v],...], "split": {"clique": [...], "stable":
// [...]}?, "threshold_sequence": ["I"|"D", ...]?}. Nodes 0-based.
json graph_to_json(const Graph& g, const SplitCert* cert = nullptr,
                   const ThresholdSeq* seq = nullptr);

struct LoadedGraph {
  Graph graph;
  std::optional<SplitCert> cert;
  std::optional<ThresholdSeq> seq;
};

LoadedGraph graph_from_json(const json& j);

// Sniffs the format: JSON when the first non-space byte is '{', otherwise
// the tiny edge-list text format ("n" on the first line, then "u v" lines;
// blank lines and '#' comments allowed).
LoadedGraph load_graph_file(const std::string& path);
LoadedGraph parse_graph_text(const std::string& text);

// Vertex list, facet list, and the incidence matrix row-major (one hex
// string per vertex; bit j of the value is incidence with facet j).
json incidence_to_json(const IncidenceStructure& inc);

// {"s": ..., "classes": {...}?, "f_vector": [...]?, "faces": [hex...]?};
// the face dump lists each face's vertex set as fixed-width hex, sorted.
json census_to_json(const FaceCensus& census, bool include_faces = false);

json classes_to_json(const ClassCounts& c);

// {"graph": ..., "d": ..., "s": ..., "p_g": ..., identities...} — the graph
// echo is passed in so callers control how the graph is described.
json report_to_json(const VerifyReport& r, json graph_echo);

}  // namespace hansen
