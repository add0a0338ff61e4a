#include "hansen/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hansen {

namespace {

std::uint64_t upper_triangle_bits(const Graph& g, const std::vector<int>& p) {
  std::uint64_t bits = 0;
  int k = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v, ++k)
      if (g.has_edge(p[u], p[v])) bits |= std::uint64_t{1} << k;
  return bits;
}

}  // namespace

std::uint64_t canonical_form(const Graph& g) {
  if (g.n > 8)
    throw std::invalid_argument("canonical_form: capped at 8 nodes");
  std::vector<int> p(g.n);
  for (int i = 0; i < g.n; ++i) p[i] = i;
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, upper_triangle_bits(g, p));
  } while (std::next_permutation(p.begin(), p.end()));
  return g.n == 0 ? 0 : best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.n == b.n && canonical_form(a) == canonical_form(b);
}

std::vector<Graph> split_graphs_upto_iso(int max_n) {
  std::vector<Graph> out;
  for (int n = 0; n <= max_n; ++n) {
    // Every split graph on n nodes shows up as: clique 0..k-1, stable set
    // k..n-1, plus some set of cross edges. Dedupe identical labelings
    // first (cheap), then isomorphic ones by canonical form.
    std::set<std::vector<NodeSet>> labeled;
    std::map<std::uint64_t, Graph> canon;
    for (int k = 0; k <= n; ++k) {
      int l = n - k;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k * l));
           ++mask) {
        Graph g(n);
        for (int u = 0; u < k; ++u)
          for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
        for (int c = 0; c < k; ++c)
          for (int s = 0; s < l; ++s)
            if ((mask >> (c * l + s)) & 1) g.add_edge(c, k + s);
        if (!labeled.insert(g.adj).second) continue;
        canon.emplace(canonical_form(g), g);
      }
    }
    for (auto& [form, g] : canon) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace hansen
