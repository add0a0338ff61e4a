#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hansen/incidence.hpp"
#include "test_util.hpp"

using namespace hansen;
using testutil::make_graph;

namespace {

// Every split graph on <= 4 nodes up to isomorphism, plus a couple of bigger
// ones; small enough that each test below can afford full V x F scans.
std::vector<Graph> small_corpus() {
  auto graphs = split_graphs_upto_iso(4);
  // bull: triangle 0-1-2 with horns 3 and 4
  graphs.push_back(
      make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}));
  graphs.push_back(complete_graph(5));
  graphs.push_back(random_split(3, 3, 0.5, 7).first);
  return graphs;
}

}  // namespace

TEST_CASE("stable sets and cliques of P4") {
  Graph p4 = path_graph(4);
  auto st = stable_sets(p4);
  CHECK(st.size() == 8);  // {}, 4 singletons, {0,2}, {0,3}, {1,3}
  CHECK(std::is_sorted(st.begin(), st.end()));
  auto cl = cliques(p4);
  CHECK(cl.size() == 8);  // {}, 4 singletons, 3 edges
  for (NodeSet q : cl) CHECK(is_clique(p4, q));
  for (NodeSet s : st) CHECK(is_stable(p4, s));
  CHECK(cliques(empty_graph(0)) == std::vector<NodeSet>{0});
}

TEST_CASE("vertex and facet lists") {
  Graph p4 = path_graph(4);
  auto verts = hansen_vertices(p4);
  auto facs = hansen_facets(p4);
  CHECK(verts.size() == 16);
  CHECK(facs.size() == 16);
  CHECK(std::is_sorted(verts.begin(), verts.end(), signed_set_less));
  CHECK(std::is_sorted(facs.begin(), facs.end(), signed_set_less));
  // positive block first, negative block mirrors it
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(verts[i].sign == +1);
    CHECK(verts[i + 8].sign == -1);
    CHECK(verts[i].members == verts[i + 8].members);
  }

  // K2: the octahedron / cube pair in d = 3
  Graph k2 = complete_graph(2);
  CHECK(hansen_vertices(k2).size() == 6);
  CHECK(hansen_facets(k2).size() == 8);

  CHECK(hansen_vertices(empty_graph(0)).size() == 2);
  CHECK(hansen_facets(empty_graph(0)).size() == 2);

  Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK_THROWS_AS(hansen_facets(c5), NotSplitError);
  CHECK(hansen_facets(c5, true).size() == 22);
}

TEST_CASE("incidence rule matches the affine functional") {
  for (const Graph& g : small_corpus()) {
    IncidenceStructure inc = build_incidence(g);
    CHECK(inc.n == g.n);
    CHECK(inc.d == g.n + 1);
    for (const SignedSet& v : inc.vertices) {
      auto pt = vertex_point(v, g.n);
      REQUIRE(static_cast<int>(pt.size()) == inc.d);
      CHECK(pt[0] == v.sign);
      for (const SignedSet& f : inc.facets) {
        // facet [eps, Q]: -x_0 + 2 * sum_{i in Q} x_i = eps
        int lhs = -pt[0];
        for_each_node(f.members, [&](int i) { lhs += 2 * pt[i + 1]; });
        CHECK(lhs == functional_value(v, f));
        CHECK((lhs == -1 || lhs == 1));  // 2-level: only two values occur
        CHECK(incident(v, f) == (lhs == f.sign));
      }
    }
  }
}

TEST_CASE("incidence rows and index lookups") {
  Graph p4 = path_graph(4);
  IncidenceStructure inc = build_incidence(p4);
  CHECK(inc.num_vertices() == 16);
  CHECK(inc.num_facets() == 16);
  inc.check_proper();
  for (std::size_t v = 0; v < inc.num_vertices(); ++v)
    CHECK(inc.vertex_index(inc.vertices[v]) == static_cast<int>(v));
  for (std::size_t f = 0; f < inc.num_facets(); ++f)
    CHECK(inc.facet_index(inc.facets[f]) == static_cast<int>(f));
  CHECK(inc.vertex_index({+1, 0b0011}) == -1);  // {0,1} is an edge, not stable
  CHECK(inc.facet_index({-1, 0b0101}) == -1);   // {0,2} is no clique
  for (std::size_t v = 0; v < inc.num_vertices(); ++v)
    for (std::size_t f = 0; f < inc.num_facets(); ++f) {
      CHECK(inc.vrow[v].test(f) == incident(inc.vertices[v], inc.facets[f]));
      CHECK(inc.frow[f].test(v) == inc.vrow[v].test(f));
    }
}

TEST_CASE("central symmetry pairs up rows") {
  for (const Graph& g : small_corpus()) {
    IncidenceStructure inc = build_incidence(g);
    for (const SignedSet& v : inc.vertices) {
      int iv = inc.vertex_index(v);
      int in = inc.vertex_index({-v.sign, v.members});
      REQUIRE(in >= 0);
      // antipodal vertices lie on complementary facet sets
      BitVec both = inc.vrow[iv];
      both &= inc.vrow[in];
      CHECK(both.none());
      BitVec either = inc.vrow[iv];
      either |= inc.vrow[in];
      CHECK(either.count() == inc.num_facets());
    }
  }
}

TEST_CASE("duality transposes the incidence structure") {
  for (const Graph& g : small_corpus()) {
    Graph co = complement(g);
    IncidenceStructure inc = build_incidence(g);
    IncidenceStructure dual = build_incidence(co);
    REQUIRE(inc.num_facets() == dual.num_vertices());
    REQUIRE(inc.num_vertices() == dual.num_facets());
    for (std::size_t f = 0; f < inc.num_facets(); ++f)
      CHECK(dual.vertices[f] == inc.facets[f]);
    for (std::size_t v = 0; v < inc.num_vertices(); ++v)
      for (std::size_t f = 0; f < inc.num_facets(); ++f)
        CHECK(inc.vrow[v].test(f) == dual.vrow[f].test(v));
  }
}

TEST_CASE("vertex points are the signed stable set indicators") {
  auto pt = vertex_point({-1, 0b0101}, 4);
  CHECK(pt == std::vector<int>{-1, -1, 0, -1, 0});
  pt = vertex_point({+1, 0}, 2);
  CHECK(pt == std::vector<int>{1, 0, 0});
}
