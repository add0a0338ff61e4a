#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hansen/incidence.hpp"

namespace hansen {

inline constexpr std::uint64_t kDefaultFaceBudget = 50'000'000;

struct BudgetExceeded : std::runtime_error {
  std::uint64_t budget;
  explicit BudgetExceeded(std::uint64_t b)
      : std::runtime_error("face budget exceeded"), budget(b) {}
};

// A nonempty face, stored as the mutually closed pair (vertex set, facet
// set): fset is every facet containing all of vset, vset is every vertex on
// all of fset. The polytope itself is (all vertices, no facets).
struct Face {
  BitVec vset;
  BitVec fset;
};

enum class FaceClass : std::uint8_t { Primitive, Positive, Negative, Small };

struct ClassCounts {
  std::uint64_t primitive = 0;
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  std::uint64_t small = 0;

  std::uint64_t sum() const { return primitive + positive + negative + small; }
  bool operator==(const ClassCounts&) const = default;
};

struct FaceCensus {
  std::uint64_t total = 0;          // s(P): all nonempty faces including P
  std::vector<Face> faces;          // sorted by vset bit pattern
  std::vector<FaceClass> face_class;  // parallel to faces; set by classify
  std::optional<ClassCounts> by_class;
  std::optional<std::vector<std::uint64_t>> fvec;  // f_0..f_d
};

// Galois closure of a nonempty vertex seed: the smallest face containing it.
Face closure(const IncidenceStructure& inc, const BitVec& seed);

// Breadth-first closure expansion: start from the polytope and the
// single-vertex closures, repeatedly intersect a known face's vertex set
// with each facet row, deduplicate by vertex set. Every nonempty
// intersection of facet rows is reached. Throws BudgetExceeded when more
// than `budget` distinct faces appear.
FaceCensus enumerate_faces(const IncidenceStructure& inc,
                           std::uint64_t budget = kDefaultFaceBudget);

// Independent oracle: walk all 2^(#facets) facet subsets (with subsumption
// pruning that provably drops only repeats), collect the distinct nonempty
// common vertex sets, plus the polytope for the empty subset. Requires at
// most 24 facets.
FaceCensus brute_force_faces(const IncidenceStructure& inc);

// Assign each face a class by the type-(1) facets containing it (facets
// [ε,A] with A inside cert.clique): none -> primitive, only '+' -> positive,
// only '−' -> negative, both -> small. The certificate is validated against
// the incidence structure (clique must appear among facet member sets,
// stable side among vertex member sets).
void classify_faces(const IncidenceStructure& inc, const SplitCert& cert,
                    FaceCensus& census);

// Exact f-vector: dimension of a face = affine rank of its vertex points
// over the rationals (fraction-free integer elimination; falls back to
// arbitrary precision if 64-bit intermediates would overflow).
void compute_f_vector(const IncidenceStructure& inc, FaceCensus& census);

}  // namespace hansen
