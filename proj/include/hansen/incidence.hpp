#pragma once

#include <stdexcept>
#include <vector>

#include "hansen/bits.hpp"
#include "hansen/graph.hpp"

namespace hansen {

// A sign together with a node set. With sign ε and member set A this is
// either the vertex (ε, A) of H(G), the point ε·(e_0 + Σ_{i∈A} e_i) for a
// stable set A, or the facet [ε, A] cut out by −x_0 + 2·Σ_{i∈A} x_i = ε for
// a clique A (the empty clique included).
struct SignedSet {
  int sign = +1;  // +1 or -1
  NodeSet members = 0;

  bool operator==(const SignedSet&) const = default;
};

// Canonical enumeration order: all '+' sets before all '−' sets, each block
// by numeric value of the member set.
inline bool signed_set_less(const SignedSet& a, const SignedSet& b) {
  if (a.sign != b.sign) return a.sign > b.sign;
  return a.members < b.members;
}

struct NotSplitError : std::runtime_error {
  NotSplitError()
      : std::runtime_error(
            "graph is not split; pass assume-perfect to use the clique facet "
            "description anyway") {}
};

// All stable sets (no internal edge), including the empty set, ordered by
// numeric value of the bitmask. Backtracking with neighbor pruning, so the
// cost is proportional to the output.
std::vector<NodeSet> stable_sets(const Graph& g);

// All cliques including the empty one; equals stable_sets(complement(g)).
std::vector<NodeSet> cliques(const Graph& g);

// Both signs of every stable set / clique, in canonical order.
std::vector<SignedSet> hansen_vertices(const Graph& g);
// The facet list is only the true facet description when the graph is
// perfect; we certify split inputs and otherwise require assume_perfect.
std::vector<SignedSet> hansen_facets(const Graph& g,
                                     bool assume_perfect = false);

// Vertex (ε,I) lies on facet [ε',Q] iff the signs agree and I meets Q, or
// the signs differ and I misses Q.
inline bool incident(const SignedSet& vertex, const SignedSet& facet) {
  bool meets = (vertex.members & facet.members) != 0;
  return (vertex.sign == facet.sign) == meets;
}

// Value of the facet functional −x_0 + 2·Σ_{i∈Q} x_i at the vertex point;
// equals ε(2|I∩Q| − 1). Incidence with [ε',Q] means the value is ε'·1.
inline int functional_value(const SignedSet& vertex, const SignedSet& facet) {
  return vertex.sign * (2 * set_size(vertex.members & facet.members) - 1);
}

// Coordinates (x_0, x_1, ..., x_n) of the vertex point ε(e_0 + Σ_{i∈I} e_i).
std::vector<int> vertex_point(const SignedSet& vertex, int n);

struct IncidenceStructure {
  int n = 0;  // graph nodes
  int d = 0;  // polytope dimension, n + 1
  std::vector<SignedSet> vertices;  // canonical order
  std::vector<SignedSet> facets;    // canonical order
  std::vector<BitVec> vrow;         // per vertex: incident facets
  std::vector<BitVec> frow;         // per facet: incident vertices

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_facets() const { return facets.size(); }

  // Binary search in the canonical order; -1 when absent.
  int vertex_index(const SignedSet& v) const;
  int facet_index(const SignedSet& f) const;

  // Properness: every facet has an incident and a non-incident vertex.
  // Throws std::logic_error on violation.
  void check_proper() const;
};

IncidenceStructure build_incidence(const Graph& g,
                                   bool assume_perfect = false);

}  // namespace hansen
