#pragma once

#include <cstdint>
#include <vector>

#include "hansen/graph.hpp"

namespace hansen {

// f_0..f_d, nonempty faces by dimension; the last entry counts the polytope
// itself, so it is 1.
using FVector = std::vector<std::uint64_t>;

inline std::uint64_t fvec_sum(const FVector& fv) {
  std::uint64_t s = 0;
  for (auto x : fv) s += x;
  return s;
}

// Euler's relation on the proper part: Σ_{k<d} (−1)^k f_k = 1 − (−1)^d.
bool euler_ok(const FVector& fv);

FVector fvec_segment();                                // (2, 1)
FVector fvec_product(const FVector& a, const FVector& b);  // convolution
FVector fvec_polar(const FVector& a);  // reverse the proper part

// Hanner recursion along a threshold creation sequence: start from a
// segment; an isolated node multiplies by a segment, a dominating node does
// the same on the polar side (polar(polar(prev) × segment)). The result
// equals the enumerated f-vector of the Hansen polytope of
// build_threshold(seq).
FVector hanner_from_threshold(const ThresholdSeq& seq);

}  // namespace hansen
