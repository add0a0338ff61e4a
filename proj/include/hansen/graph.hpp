#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hansen/bits.hpp"

namespace hansen {

inline constexpr int kMaxNodes = 63;  // every node set fits one machine word

// Simple undirected graph on nodes 0..n-1, adjacency as per-node bitmasks.
struct Graph {
  int n = 0;
  std::vector<NodeSet> adj;

  Graph() = default;
  explicit Graph(int n_);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return set_has(adj[u], v); }
  NodeSet neighbors(int v) const { return adj[v]; }
  int degree(int v) const { return set_size(adj[v]); }
  NodeSet nodes() const { return full_node_set(n); }
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  bool operator==(const Graph&) const = default;

  // Throws std::invalid_argument on broken invariants (loops, asymmetry,
  // out-of-range members).
  void check() const;
};

// Certified partition V = C ∪ S with C a clique and S stable.
struct SplitCert {
  NodeSet clique = 0;
  NodeSet stable = 0;

  bool operator==(const SplitCert&) const = default;
};

enum class ThresholdStep : std::uint8_t { Isolated, Dominating };
using ThresholdSeq = std::vector<ThresholdStep>;

// "I"/"D" per step, e.g. "IID".
std::string seq_to_string(const ThresholdSeq& seq);
ThresholdSeq seq_from_string(const std::string& s);  // throws on other chars

Graph complement(const Graph& g);

bool is_clique(const Graph& g, NodeSet s);
bool is_stable(const Graph& g, NodeSet s);
bool cert_valid(const Graph& g, const SplitCert& cert);

// Degree-sequence split recognition. On success the certificate is canonical:
// among all maximum-size cliques whose complement is stable, the one
// containing the smallest first-divergent vertex (set_lex_less).
std::optional<SplitCert> recognize_split(const Graph& g);
bool is_split(const Graph& g);

// Peels isolated/dominating nodes, scanning the remaining nodes from the
// highest index down and preferring Isolated when both apply. Returns the
// creation sequence (reverse peel order), or nullopt if g is not threshold.
std::optional<ThresholdSeq> recognize_threshold(const Graph& g);

// Node i is adjacent to all j < i iff steps[i] == Dominating.
Graph build_threshold(const ThresholdSeq& seq);

// Clique join: disjoint union of g and t plus all edges between cert.clique
// and V(t). The returned certificate extends cert by t's dominating nodes on
// the clique side and isolated nodes on the stable side (t's nodes are
// shifted by g.n). Throws std::invalid_argument if cert is not valid for g,
// or if tseq's dominating/isolated split is not a valid split of t.
std::pair<Graph, SplitCert> ltimes(const Graph& g, const SplitCert& cert,
                                   const Graph& t, const ThresholdSeq& tseq);

// Clique on nodes 0..k-1, stable set k..k+l-1, each cross edge present
// independently with probability p (SplitMix64 stream, one unit() draw per
// (c,s) pair, c-major order). Throws if k+l exceeds node capacity.
std::pair<Graph, SplitCert> random_split(int k, int l, double p,
                                         std::uint64_t seed);

// One step per next() draw: Dominating iff the top output bit is set.
ThresholdSeq random_threshold_sequence(int m, std::uint64_t seed);

bool has_induced_p4(const Graph& g);

Graph path_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);

}  // namespace hansen
