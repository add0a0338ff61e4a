#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hansen/faces.hpp"
#include "hansen/graph.hpp"
#include "hansen/incidence.hpp"

namespace hansen {

// A 3-way split of each certificate side: (C⁺, C⁻, C⁰) partitions the clique
// and (S⁺, S⁻, S⁰) the stable set.
struct TriPartition {
  NodeSet cplus = 0, cminus = 0, czero = 0;
  NodeSet splus = 0, sminus = 0, szero = 0;

  bool operator==(const TriPartition&) const = default;
  bool trivial() const { return (cplus | cminus | splus | sminus) == 0; }
};

bool partition_valid(const SplitCert& cert, const TriPartition& t);

// (A): every node of C⁺ ∪ C⁻ has a neighbor in S⁺ ∪ S⁻.
bool condition_A(const Graph& g, const SplitCert& cert, const TriPartition& t);
// (B): every node of S⁺ ∪ S⁻ has a nonneighbor in C⁺ ∪ C⁻.
bool condition_B(const Graph& g, const SplitCert& cert, const TriPartition& t);

// p_G(C,S): nontrivial partitions satisfying both (A) and (B), enumerated
// over all 3^n sign assignments.
std::uint64_t count_pg(const Graph& g, const SplitCert& cert);

enum class PiSide { A, B };

// |Π_A| or |Π_B|: partitions satisfying the one condition, the trivial
// all-zero partition included.
std::uint64_t count_pi(const Graph& g, const SplitCert& cert, PiSide side);

// |Π_A| refined by the (S⁺,S⁻) pair.
std::map<std::pair<NodeSet, NodeSet>, std::uint64_t> count_pi_a_refined(
    const Graph& g, const SplitCert& cert);

// Face-to-partition map: on a primitive face, S^ε is the intersection of the
// member sets of the face's type-(1) vertices of sign ε, and
//   C^ε = {c ∈ C : (ε, (S^ε \ N(c)) ∪ c) is a vertex of the face and no
//          vertex of sign −ε in the face contains c}.
// Requires a primitive face with S⁺ ∪ S⁻ ≠ ∅ (the polytope itself and the
// rest of the trivial stratum are rejected). The result satisfies (A).
TriPartition psi(const Graph& g, const SplitCert& cert,
                 const IncidenceStructure& inc, const Face& face);

// Partition-to-face map: intersect, for s ∈ S⁺, the facets
// [+, (C⁺∩N(s)) ∪ s] and [+, (N(s)∖C⁻) ∪ s], and for s ∈ S⁻ the facets
// [−, (C⁻∩N(s)) ∪ s] and [−, (N(s)∖C⁺) ∪ s]. Requires a valid partition
// satisfying (A) with S⁺ ∪ S⁻ ≠ ∅; the result is a primitive face that psi
// maps back to the input.
Face phi(const Graph& g, const SplitCert& cert, const IncidenceStructure& inc,
         const TriPartition& t);

struct VerifyReport {
  int d = 0;
  std::uint64_t num_vertices = 0, num_facets = 0;
  std::uint64_t s = 0;
  std::uint64_t p_g = 0, pi_a = 0, pi_b = 0;
  ClassCounts classes;
  std::optional<std::vector<std::uint64_t>> fvec;
  bool main = false;     // s = 3^d + p_G
  bool fplus = false;    // positive = negative = 3^(d-1)
  bool fp_piA = false;   // primitive = |Π_A|
  bool fp_piB = false;   // small = |Π_B| − 1
  bool mod16 = false;    // p_G ≡ 0 (mod 16)

  bool all_pass() const { return main && fplus && fp_piA && fp_piB && mod16; }
};

// Full pipeline on one split graph: enumerate, classify, count partitions,
// evaluate every identity. Budget overflow propagates as BudgetExceeded.
VerifyReport verify_main_theorem(const Graph& g, const SplitCert& cert,
                                 std::uint64_t budget = kDefaultFaceBudget,
                                 bool want_fvec = false);

}  // namespace hansen
