#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "hansen/faces.hpp"
#include "hansen/hanner.hpp"
#include "hansen/incidence.hpp"
#include "test_util.hpp"

using namespace hansen;
using testutil::make_graph;

namespace {

std::vector<BitVec> vsets_of(const FaceCensus& census) {
  std::vector<BitVec> out;
  for (const Face& f : census.faces) out.push_back(f.vset);
  return out;
}

}  // namespace

TEST_CASE("bitvec behaves like a fixed-width bitset") {
  BitVec b(70);
  CHECK(b.none());
  b.set(0);
  b.set(69);
  CHECK(b.count() == 2);
  CHECK(b.test(69));
  CHECK_FALSE(b.test(68));
  BitVec c(70, true);
  CHECK(c.count() == 70);
  CHECK(b.is_subset_of(c));
  CHECK_FALSE(c.is_subset_of(b));
  c &= b;
  CHECK(c == b);
  b.reset(69);
  CHECK(b.count() == 1);
  CHECK(b.intersects(c));
  BitVec d(70);
  CHECK_FALSE(d.intersects(c));
  CHECK(d < b);

  // hex dump: fixed width, lowercase, bit i contributes 2^i
  BitVec h(8);
  h.set(0);
  h.set(5);
  CHECK(h.to_hex() == "21");
  BitVec h2(9);
  h2.set(8);
  CHECK(h2.to_hex() == "100");
  CHECK(BitVec(4).to_hex() == "0");
}

TEST_CASE("closure of seeds") {
  IncidenceStructure inc = build_incidence(path_graph(4));
  // a single vertex is its own closure: Hansen polytopes are simple enough
  // that distinct vertices lie on distinct facet sets
  for (std::size_t v = 0; v < inc.num_vertices(); ++v) {
    BitVec seed(inc.num_vertices());
    seed.set(v);
    Face f = closure(inc, seed);
    CHECK(f.vset.count() == 1);
    CHECK(f.vset.test(v));
    CHECK(f.fset == inc.vrow[v]);
  }
  // antipodal pair spans the whole polytope: no common facet
  BitVec pair(inc.num_vertices());
  pair.set(inc.vertex_index({+1, 0}));
  pair.set(inc.vertex_index({-1, 0}));
  Face whole = closure(inc, pair);
  CHECK(whole.fset.none());
  CHECK(whole.vset.count() == inc.num_vertices());
  CHECK_THROWS(closure(inc, BitVec(inc.num_vertices())));
}

TEST_CASE("face counts on named graphs") {
  CHECK(enumerate_faces(build_incidence(path_graph(4))).total == 259);
  CHECK(enumerate_faces(build_incidence(complete_graph(2))).total == 27);
  CHECK(enumerate_faces(build_incidence(empty_graph(1))).total == 9);
  CHECK(enumerate_faces(build_incidence(empty_graph(0))).total == 3);
  CHECK(enumerate_faces(build_incidence(empty_graph(3))).total == 81);
  CHECK(enumerate_faces(build_incidence(complete_graph(4))).total == 243);
  CHECK(enumerate_faces(build_incidence(complete_graph(5))).total == 729);
  CHECK(enumerate_faces(build_incidence(random_split(3, 3, 0.5, 7).first))
            .total == 2235);
}

TEST_CASE("census lists faces sorted with matching facet sets") {
  IncidenceStructure inc = build_incidence(path_graph(4));
  FaceCensus census = enumerate_faces(inc);
  REQUIRE(census.faces.size() == census.total);
  auto vs = vsets_of(census);
  CHECK(std::is_sorted(vs.begin(), vs.end()));
  CHECK(std::adjacent_find(vs.begin(), vs.end()) == vs.end());
  for (const Face& f : census.faces) {
    CHECK(f.vset.any());
    // vset and fset determine each other
    BitVec vv(inc.num_vertices(), true);
    f.fset.for_each_set([&](std::size_t i) { vv &= inc.frow[i]; });
    CHECK(vv == f.vset);
    BitVec ff(inc.num_facets());
    for (std::size_t i = 0; i < inc.num_facets(); ++i)
      if (f.vset.is_subset_of(inc.frow[i])) ff.set(i);
    CHECK(ff == f.fset);
  }
}

TEST_CASE("enumeration agrees with the pruned brute force") {
  for (const Graph& g : split_graphs_upto_iso(4)) {
    IncidenceStructure inc = build_incidence(g);
    if (inc.num_facets() > 24) continue;
    FaceCensus fast = enumerate_faces(inc);
    FaceCensus brute = brute_force_faces(inc);
    CHECK(fast.total == brute.total);
    CHECK(vsets_of(fast) == vsets_of(brute));
  }
  // bull: triangle 0-1-2 with horns 3 and 4; split, 20 facets
  Graph bull = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
  CHECK(enumerate_faces(build_incidence(bull)).total ==
        brute_force_faces(build_incidence(bull)).total);
}

TEST_CASE("budget cuts the enumeration off") {
  IncidenceStructure inc = build_incidence(path_graph(4));
  CHECK_THROWS_AS(enumerate_faces(inc, 10), BudgetExceeded);
  try {
    enumerate_faces(inc, 10);
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget == 10);
  }
  CHECK(enumerate_faces(inc, 259).total == 259);
}

TEST_CASE("face classification of H(P4)") {
  Graph p4 = path_graph(4);
  SplitCert cert = *recognize_split(p4);
  IncidenceStructure inc = build_incidence(p4);
  FaceCensus census = enumerate_faces(inc);
  classify_faces(inc, cert, census);
  REQUIRE(census.by_class);
  CHECK(census.by_class->primitive == 49);
  CHECK(census.by_class->positive == 81);
  CHECK(census.by_class->negative == 81);
  CHECK(census.by_class->small == 48);
  CHECK(census.by_class->sum() == census.total);
  // the polytope itself lies on no facet at all, so it is primitive
  for (std::size_t i = 0; i < census.faces.size(); ++i)
    if (census.faces[i].fset.none())
      CHECK(census.face_class[i] == FaceClass::Primitive);

  CHECK_THROWS_AS(classify_faces(inc, SplitCert{0b1001, 0b0110}, census),
                  std::invalid_argument);
}

TEST_CASE("classification counts follow the certificate symmetry") {
  // swapping the sign convention is a central flip: positive and negative
  // trade places, primitive and small counts are intrinsic
  for (const Graph& g : split_graphs_upto_iso(4)) {
    IncidenceStructure inc = build_incidence(g);
    FaceCensus census = enumerate_faces(inc);
    for (const SplitCert& cert : testutil::all_split_certs(g)) {
      classify_faces(inc, cert, census);
      CHECK(census.by_class->sum() == census.total);
      CHECK(census.by_class->positive == census.by_class->negative);
    }
  }
}

TEST_CASE("exact f-vectors") {
  auto fvec_of = [](const Graph& g) {
    IncidenceStructure inc = build_incidence(g);
    FaceCensus census = enumerate_faces(inc);
    compute_f_vector(inc, census);
    return *census.fvec;
  };
  using FV = std::vector<std::uint64_t>;
  CHECK(fvec_of(path_graph(4)) == FV{16, 64, 98, 64, 16, 1});
  CHECK(fvec_of(complete_graph(2)) == FV{6, 12, 8, 1});
  CHECK(fvec_of(empty_graph(1)) == FV{4, 4, 1});
  CHECK(fvec_of(empty_graph(0)) == FV{2, 1});
  CHECK(fvec_of(empty_graph(3)) == FV{16, 32, 24, 8, 1});

  for (const Graph& g : split_graphs_upto_iso(4)) {
    IncidenceStructure inc = build_incidence(g);
    FaceCensus census = enumerate_faces(inc);
    compute_f_vector(inc, census);
    CHECK(fvec_sum(*census.fvec) == census.total);
    CHECK((*census.fvec)[0] == inc.num_vertices());
    CHECK((*census.fvec)[inc.d - 1] == inc.num_facets());
    CHECK(census.fvec->back() == 1);
    CHECK(euler_ok(*census.fvec));
  }
}
