#include "hansen/hanner.hpp"

#include <algorithm>

namespace hansen {

bool euler_ok(const FVector& fv) {
  int d = static_cast<int>(fv.size()) - 1;
  std::int64_t sum = 0, sign = 1;
  for (int k = 0; k < d; ++k, sign = -sign)
    sum += sign * static_cast<std::int64_t>(fv[k]);
  return sum == 1 - (d % 2 == 0 ? 1 : -1);
}

FVector fvec_segment() { return {2, 1}; }

FVector fvec_product(const FVector& a, const FVector& b) {
  // Nonempty faces of a product are products of nonempty faces, so the
  // f-vector convolves (and s multiplies).
  FVector out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

FVector fvec_polar(const FVector& a) {
  FVector out(a);
  std::reverse(out.begin(), out.end() - 1);
  return out;
}

FVector hanner_from_threshold(const ThresholdSeq& seq) {
  FVector fv = fvec_segment();
  for (ThresholdStep step : seq) {
    if (step == ThresholdStep::Isolated) {
      fv = fvec_product(fv, fvec_segment());
    } else {
      // Adding a dominating node to G is adding an isolated node to the
      // complement, and complementation is polarity on the Hansen side.
      fv = fvec_polar(fvec_product(fvec_polar(fv), fvec_segment()));
    }
  }
  return fv;
}

}  // namespace hansen
