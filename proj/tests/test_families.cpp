#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "hansen/families.hpp"
#include "test_util.hpp"

using namespace hansen;
using testutil::make_graph;

TEST_CASE("canonical form is a relabeling invariant") {
  Graph p4 = path_graph(4);
  Graph scrambled = make_graph(4, {{2, 0}, {0, 3}, {3, 1}});  // path 2-0-3-1
  CHECK(canonical_form(p4) == canonical_form(scrambled));
  CHECK(isomorphic(p4, scrambled));

  Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Graph two_k2 = make_graph(4, {{0, 1}, {2, 3}});
  CHECK(canonical_form(c4) != canonical_form(p4));
  CHECK_FALSE(isomorphic(c4, two_k2));
  CHECK(isomorphic(complement(c4), two_k2));

  CHECK(canonical_form(empty_graph(0)) == 0);
  CHECK(canonical_form(complete_graph(3)) == 0b111);
  CHECK_THROWS(canonical_form(empty_graph(9)));
}

TEST_CASE("split family sizes match the literature") {
  auto fam = split_graphs_upto_iso(6);
  std::map<int, int> by_n;
  for (const Graph& g : fam) ++by_n[g.n];
  CHECK(by_n[0] == 1);
  CHECK(by_n[1] == 1);
  CHECK(by_n[2] == 2);
  CHECK(by_n[3] == 4);
  CHECK(by_n[4] == 9);
  CHECK(by_n[5] == 21);
  CHECK(by_n[6] == 56);
  CHECK(fam.size() == 94);
}

TEST_CASE("split family members are split and pairwise distinct") {
  auto fam = split_graphs_upto_iso(5);
  std::set<std::uint64_t> forms;
  int last_n = 0;
  for (const Graph& g : fam) {
    CHECK(g.n >= last_n);  // ordered by node count
    last_n = g.n;
    CHECK(is_split(g));
    CHECK(forms.insert((std::uint64_t{1} << 60) * g.n + canonical_form(g))
              .second);
  }
}

TEST_CASE("split family is complete against the labeled sweep") {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::uint64_t> seen;
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (is_split(g)) seen.insert(canonical_form(g));
    });
    std::map<int, int> by_n;
    for (const Graph& g : split_graphs_upto_iso(n))
      ++by_n[g.n];
    CHECK(by_n[n] == static_cast<int>(seen.size()));
  }
}
