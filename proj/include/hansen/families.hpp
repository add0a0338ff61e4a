#pragma once

#include <cstdint>
#include <vector>

#include "hansen/graph.hpp"

namespace hansen {

// Brute-force canonical form for graphs on at most 8 nodes: the minimum,
// over all node permutations, of the upper-triangle adjacency bits packed
// (0,1),(0,2),...,(0,n-1),(1,2),... into one word.
std::uint64_t canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// All split graphs with 0..max_n nodes, one per isomorphism class, obtained
// by enumerating clique size / stable size / cross-edge masks and
// deduplicating by canonical form. Ordered by (node count, canonical form).
std::vector<Graph> split_graphs_upto_iso(int max_n);

// All 2^(n choose 2) labeled graphs on n nodes, by edge mask.
template <class F>
void for_each_labeled_graph(int n, F f) {
  int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g(n);
    int k = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++k)
        if ((mask >> k) & 1) g.add_edge(u, v);
    f(g);
  }
}

}  // namespace hansen
