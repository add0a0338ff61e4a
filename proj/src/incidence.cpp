#include "hansen/incidence.hpp"

#include <algorithm>

namespace hansen {

namespace {

void extend_stable(const Graph& g, NodeSet cur, NodeSet cand,
                   std::vector<NodeSet>& out) {
  out.push_back(cur);
  for_each_node(cand, [&](int v) {
    // candidates above v that survive v's neighborhood
    NodeSet rest = cand & ~full_node_set(v + 1) & ~g.adj[v];
    extend_stable(g, cur | node_bit(v), rest, out);
  });
}

}  // namespace

std::vector<NodeSet> stable_sets(const Graph& g) {
  std::vector<NodeSet> out;
  extend_stable(g, 0, g.nodes(), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeSet> cliques(const Graph& g) {
  return stable_sets(complement(g));
}

std::vector<SignedSet> hansen_vertices(const Graph& g) {
  std::vector<SignedSet> out;
  auto stab = stable_sets(g);
  out.reserve(2 * stab.size());
  for (NodeSet s : stab) out.push_back({+1, s});
  for (NodeSet s : stab) out.push_back({-1, s});
  return out;
}

std::vector<SignedSet> hansen_facets(const Graph& g, bool assume_perfect) {
  if (!assume_perfect && !is_split(g)) throw NotSplitError{};
  std::vector<SignedSet> out;
  auto cl = cliques(g);
  out.reserve(2 * cl.size());
  for (NodeSet c : cl) out.push_back({+1, c});
  for (NodeSet c : cl) out.push_back({-1, c});
  return out;
}

std::vector<int> vertex_point(const SignedSet& vertex, int n) {
  std::vector<int> x(n + 1, 0);
  x[0] = vertex.sign;
  for_each_node(vertex.members, [&](int i) { x[i + 1] = vertex.sign; });
  return x;
}

namespace {

int find_signed(const std::vector<SignedSet>& list, const SignedSet& key) {
  auto it = std::lower_bound(list.begin(), list.end(), key, signed_set_less);
  if (it != list.end() && *it == key)
    return static_cast<int>(it - list.begin());
  return -1;
}

}  // namespace

int IncidenceStructure::vertex_index(const SignedSet& v) const {
  return find_signed(vertices, v);
}

int IncidenceStructure::facet_index(const SignedSet& f) const {
  return find_signed(facets, f);
}

void IncidenceStructure::check_proper() const {
  for (std::size_t f = 0; f < facets.size(); ++f) {
    auto c = frow[f].count();
    if (c == 0 || c == vertices.size())
      throw std::logic_error("improper facet row");
  }
}

IncidenceStructure build_incidence(const Graph& g, bool assume_perfect) {
  IncidenceStructure inc;
  inc.n = g.n;
  inc.d = g.n + 1;
  inc.vertices = hansen_vertices(g);
  inc.facets = hansen_facets(g, assume_perfect);

  std::size_t nv = inc.vertices.size(), nf = inc.facets.size();
  inc.vrow.assign(nv, BitVec(nf));
  inc.frow.assign(nf, BitVec(nv));
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t f = 0; f < nf; ++f)
      if (incident(inc.vertices[v], inc.facets[f])) {
        inc.vrow[v].set(f);
        inc.frow[f].set(v);
      }
  return inc;
}

}  // namespace hansen
