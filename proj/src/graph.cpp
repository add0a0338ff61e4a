#include "hansen/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "hansen/rng.hpp"

namespace hansen {

Graph::Graph(int n_) : n(n_), adj(n_, 0) {
  if (n_ < 0 || n_ > kMaxNodes)
    throw std::invalid_argument("graph size out of range 0..63");
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  adj[u] |= node_bit(v);
  adj[v] |= node_bit(u);
}

std::size_t Graph::edge_count() const {
  std::size_t deg_sum = 0;
  for (int v = 0; v < n; ++v) deg_sum += degree(v);
  return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for_each_node(adj[u] & ~full_node_set(u + 1), [&](int v) {
      out.emplace_back(u, v);
    });
  return out;
}

void Graph::check() const {
  if (n < 0 || n > kMaxNodes || static_cast<int>(adj.size()) != n)
    throw std::invalid_argument("bad graph shape");
  for (int v = 0; v < n; ++v) {
    if (adj[v] & ~nodes()) throw std::invalid_argument("neighbor out of range");
    if (set_has(adj[v], v)) throw std::invalid_argument("self-loop");
    for_each_node(adj[v], [&](int u) {
      if (!set_has(adj[u], v)) throw std::invalid_argument("asymmetric adjacency");
    });
  }
}

std::string seq_to_string(const ThresholdSeq& seq) {
  std::string s;
  s.reserve(seq.size());
  for (auto step : seq)
    s.push_back(step == ThresholdStep::Isolated ? 'I' : 'D');
  return s;
}

ThresholdSeq seq_from_string(const std::string& s) {
  ThresholdSeq seq;
  seq.reserve(s.size());
  for (char c : s) {
    if (c == 'I')
      seq.push_back(ThresholdStep::Isolated);
    else if (c == 'D')
      seq.push_back(ThresholdStep::Dominating);
    else
      throw std::invalid_argument("threshold step must be 'I' or 'D'");
  }
  return seq;
}

Graph complement(const Graph& g) {
  Graph out(g.n);
  for (int v = 0; v < g.n; ++v)
    out.adj[v] = g.nodes() & ~g.adj[v] & ~node_bit(v);
  return out;
}

bool is_clique(const Graph& g, NodeSet s) {
  bool ok = true;
  for_each_node(s, [&](int v) {
    if ((s & ~node_bit(v)) & ~g.adj[v]) ok = false;
  });
  return ok;
}

bool is_stable(const Graph& g, NodeSet s) {
  bool ok = true;
  for_each_node(s, [&](int v) {
    if (s & g.adj[v]) ok = false;
  });
  return ok;
}

bool cert_valid(const Graph& g, const SplitCert& cert) {
  if (cert.clique & cert.stable) return false;
  if ((cert.clique | cert.stable) != g.nodes()) return false;
  return is_clique(g, cert.clique) && is_stable(g, cert.stable);
}

namespace {

// All maximum cliques that split the graph. If (C0, V\C0) is one valid split
// with |C0| maximum, every other maximum clique differs from C0 by a single
// swap: two swapped-in nodes would both lie in the stable set V\C0 yet be
// adjacent inside the new clique.
SplitCert canonical_cert(const Graph& g, NodeSet c0) {
  NodeSet best = c0;
  NodeSet s0 = g.nodes() & ~c0;
  for_each_node(c0, [&](int c) {
    NodeSet base = c0 & ~node_bit(c);
    for_each_node(s0, [&](int s) {
      // swapped-in s must see all of base; swapped-out c must see none of
      // the new stable side except possibly s itself
      if ((base & ~g.adj[s]) != 0) return;
      NodeSet cand = base | node_bit(s);
      NodeSet stab = (s0 & ~node_bit(s)) | node_bit(c);
      if (g.adj[c] & stab) return;
      if (set_lex_less(cand, best)) best = cand;
    });
  });
  return SplitCert{best, g.nodes() & ~best};
}

}  // namespace

std::optional<SplitCert> recognize_split(const Graph& g) {
  if (g.n == 0) return SplitCert{0, 0};

  // Degree-sequence test: with d_1 >= ... >= d_n and
  // h = max{i : d_i >= i-1}, the graph is split iff
  // sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i, and then the h nodes of largest
  // degree form a maximum clique whose complement is stable.
  std::vector<int> order(g.n);
  for (int v = 0; v < g.n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  int h = 0;
  for (int i = 1; i <= g.n; ++i)
    if (g.degree(order[i - 1]) >= i - 1) h = i;

  std::uint64_t head = 0, tail = 0;
  for (int i = 0; i < g.n; ++i)
    (i < h ? head : tail) += g.degree(order[i]);
  if (head != static_cast<std::uint64_t>(h) * (h - 1) + tail)
    return std::nullopt;

  NodeSet c0 = 0;
  for (int i = 0; i < h; ++i) c0 |= node_bit(order[i]);
  SplitCert cert = canonical_cert(g, c0);
  if (!cert_valid(g, cert))
    throw std::logic_error("split recognition produced an invalid certificate");
  return cert;
}

bool is_split(const Graph& g) { return recognize_split(g).has_value(); }

std::optional<ThresholdSeq> recognize_threshold(const Graph& g) {
  std::vector<ThresholdStep> peel;
  NodeSet remaining = g.nodes();
  while (remaining) {
    bool found = false;
    for (int v = g.n - 1; v >= 0 && !found; --v) {
      if (!set_has(remaining, v)) continue;
      NodeSet others = remaining & ~node_bit(v);
      NodeSet nb = g.adj[v] & remaining;
      if (nb == 0) {
        peel.push_back(ThresholdStep::Isolated);
        remaining = others;
        found = true;
      } else if (nb == others) {
        peel.push_back(ThresholdStep::Dominating);
        remaining = others;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  std::reverse(peel.begin(), peel.end());
  return peel;
}

Graph build_threshold(const ThresholdSeq& seq) {
  Graph g(static_cast<int>(seq.size()));
  for (int i = 0; i < g.n; ++i)
    if (seq[i] == ThresholdStep::Dominating)
      for (int j = 0; j < i; ++j) g.add_edge(i, j);
  return g;
}

std::pair<Graph, SplitCert> ltimes(const Graph& g, const SplitCert& cert,
                                   const Graph& t, const ThresholdSeq& tseq) {
  if (!cert_valid(g, cert))
    throw std::invalid_argument("ltimes: invalid split certificate");
  if (static_cast<int>(tseq.size()) != t.n)
    throw std::invalid_argument("ltimes: sequence length differs from t");
  NodeSet ct = 0, st = 0;
  for (int i = 0; i < t.n; ++i)
    (tseq[i] == ThresholdStep::Dominating ? ct : st) |= node_bit(i);
  if (!is_clique(t, ct) || !is_stable(t, st))
    throw std::invalid_argument("ltimes: sequence does not split t");

  Graph out(g.n + t.n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : t.edges()) out.add_edge(g.n + u, g.n + v);
  for_each_node(cert.clique, [&](int c) {
    for (int i = 0; i < t.n; ++i) out.add_edge(c, g.n + i);
  });

  SplitCert ocert{cert.clique | (ct << g.n), cert.stable | (st << g.n)};
  if (!cert_valid(out, ocert))
    throw std::logic_error("ltimes: composed certificate invalid");
  return {out, ocert};
}

std::pair<Graph, SplitCert> random_split(int k, int l, double p,
                                         std::uint64_t seed) {
  if (k < 0 || l < 0 || k + l > kMaxNodes)
    throw std::invalid_argument("random_split: size out of range");
  Graph g(k + l);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  SplitMix64 rng(seed);
  for (int c = 0; c < k; ++c)
    for (int s = k; s < k + l; ++s)
      if (rng.unit() < p) g.add_edge(c, s);
  return {g, SplitCert{full_node_set(k), full_node_set(k + l) & ~full_node_set(k)}};
}

ThresholdSeq random_threshold_sequence(int m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  ThresholdSeq seq(m);
  for (int i = 0; i < m; ++i)
    seq[i] = (rng.next() >> 63) ? ThresholdStep::Dominating
                                : ThresholdStep::Isolated;
  return seq;
}

bool has_induced_p4(const Graph& g) {
  // On four nodes, "3 induced edges with degree multiset {1,1,2,2}" pins
  // down the path: the other 3-edge graphs on 4 nodes (triangle+isolated,
  // star, path+isolated) all have a different degree multiset.
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c)
        for (int d = c + 1; d < g.n; ++d) {
          NodeSet quad = node_bit(a) | node_bit(b) | node_bit(c) | node_bit(d);
          int deg[4], edges = 0, i = 0;
          for (int v : {a, b, c, d}) {
            deg[i] = set_size(g.adj[v] & quad);
            edges += deg[i++];
          }
          if (edges != 6) continue;  // 2 * 3 edges
          std::sort(deg, deg + 4);
          if (deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2)
            return true;
        }
  return false;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

}  // namespace hansen
