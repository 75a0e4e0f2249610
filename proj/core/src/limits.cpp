#include "hybridcomb/limits.hpp"

#include <cmath>

#include "hybridcomb/error.hpp"

namespace hybridcomb {

namespace {

// Node `first` is crossed before node `second` when moving in +x.
MergedCouplings merge_ordered(double first0, double first1, double second0, double second1,
                              MergeDirection direction) {
  const double denom = 1.0 + first1 * second1;
  if (!std::isfinite(denom) || std::abs(denom) < kMergeTolerance) {
    throw Error(ErrorKind::MergeSingular, "1 + v1*w1 vanishes; merged couplings diverge");
  }
  const double u0 = (first0 * (1.0 - second1) * (1.0 - second1) +
                     second0 * (1.0 + first1) * (1.0 + first1)) /
                    (denom * denom);
  // Symmetric in the two nodes, so both directions return the bitwise same value.
  const double u1 = (first1 + second1) / denom;
  return {u0, u1, direction};
}

void require_finite(const TwoSpeciesParams& p) {
  if (!std::isfinite(p.w0) || !std::isfinite(p.w1) || !std::isfinite(p.v0) || !std::isfinite(p.v1)) {
    throw Error(ErrorKind::InvalidParameter, "couplings must be finite");
  }
}

}  // namespace

MergedCouplings merge_d_to_zero(const TwoSpeciesParams& p) {
  require_finite(p);
  return merge_ordered(p.w0, p.w1, p.v0, p.v1, MergeDirection::ToZero);
}

MergedCouplings merge_d_to_a(const TwoSpeciesParams& p) {
  require_finite(p);
  return merge_ordered(p.v0, p.v1, p.w0, p.w1, MergeDirection::ToA);
}

TwoSpeciesParams exchange_map(const TwoSpeciesParams& p) {
  return {p.v0, p.v1, p.w0, p.w1, p.a - p.d, p.a};
}

}  // namespace hybridcomb
