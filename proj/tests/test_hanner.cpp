#include <doctest.h>

#include <vector>

#include "hansen/faces.hpp"
#include "hansen/hanner.hpp"
#include "hansen/incidence.hpp"
#include "test_util.hpp"

using namespace hansen;

namespace {

FVector enumerated_fvec(const Graph& g) {
  IncidenceStructure inc = build_incidence(g);
  FaceCensus census = enumerate_faces(inc);
  compute_f_vector(inc, census);
  return *census.fvec;
}

}  // namespace

TEST_CASE("f-vector calculus") {
  CHECK(fvec_segment() == FVector{2, 1});
  CHECK(fvec_sum(FVector{2, 1}) == 3);
  // square = segment x segment
  CHECK(fvec_product(fvec_segment(), fvec_segment()) == FVector{4, 4, 1});
  // cube and octahedron
  FVector cube = fvec_product(FVector{4, 4, 1}, fvec_segment());
  CHECK(cube == FVector{8, 12, 6, 1});
  CHECK(fvec_polar(cube) == FVector{6, 12, 8, 1});
  CHECK(fvec_polar(fvec_polar(cube)) == cube);
  CHECK(fvec_polar(FVector{2, 1}) == FVector{2, 1});
  CHECK(euler_ok(cube));
  CHECK(euler_ok(FVector{2, 1}));
  CHECK_FALSE(euler_ok(FVector{8, 12, 7, 1}));
}

TEST_CASE("hanner recursion on named sequences") {
  CHECK(hanner_from_threshold(seq_from_string("")) == FVector{2, 1});
  CHECK(hanner_from_threshold(seq_from_string("I")) == FVector{4, 4, 1});
  CHECK(hanner_from_threshold(seq_from_string("D")) == FVector{4, 4, 1});
  CHECK(hanner_from_threshold(seq_from_string("II")) == FVector{8, 12, 6, 1});
  CHECK(hanner_from_threshold(seq_from_string("DD")) == FVector{6, 12, 8, 1});
  CHECK(hanner_from_threshold(seq_from_string("IID")) ==
        FVector{10, 28, 30, 12, 1});
}

TEST_CASE("hanner recursion matches enumeration up to 6 steps") {
  for (int m = 0; m <= 6; ++m) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      ThresholdSeq seq;
      for (int i = 0; i < m; ++i)
        seq.push_back((mask >> i) & 1 ? ThresholdStep::Dominating
                                      : ThresholdStep::Isolated);
      Graph g = build_threshold(seq);
      FVector predicted = hanner_from_threshold(seq);
      FVector actual = enumerated_fvec(g);
      CHECK(predicted == actual);
      CHECK(fvec_sum(predicted) == pow3(m + 1));
      CHECK(euler_ok(predicted));
    }
  }
}

TEST_CASE("isolated and dominating nodes scale s by 3") {
  for (const Graph& g : split_graphs_upto_iso(4)) {
    std::uint64_t s = enumerate_faces(build_incidence(g)).total;

    Graph iso(g.n + 1);
    for (auto [u, v] : g.edges()) iso.add_edge(u, v);
    CHECK(enumerate_faces(build_incidence(iso)).total == 3 * s);

    Graph dom(g.n + 1);
    for (auto [u, v] : g.edges()) dom.add_edge(u, v);
    for (int v = 0; v < g.n; ++v) dom.add_edge(v, g.n);
    CHECK(enumerate_faces(build_incidence(dom)).total == 3 * s);
  }
}

TEST_CASE("polarity reverses the f-vector") {
  for (const Graph& g : split_graphs_upto_iso(4)) {
    FVector mine = enumerated_fvec(g);
    FVector dual = enumerated_fvec(complement(g));
    CHECK(dual == fvec_polar(mine));
    CHECK(fvec_sum(dual) == fvec_sum(mine));
  }
}
