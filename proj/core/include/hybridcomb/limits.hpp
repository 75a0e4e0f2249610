#pragma once

#include "hybridcomb/params.hpp"

namespace hybridcomb {

/// Merging refuses when |1 + v1·w1| falls below this.
inline constexpr double kMergeTolerance = 1e-9;

enum class MergeDirection { ToZero, ToA };

/// Single δ–δ′ node equivalent to two coalescing nodes.
struct MergedCouplings {
  double u0 = 0.0;
  double u1 = 0.0;
  MergeDirection direction = MergeDirection::ToZero;

  OneSpeciesParams as_one_species(double a) const { return {u0, u1, a}; }
};

// The two nodes sit at -d/2 (w) and +d/2 (v). As d → 0 the w node is crossed first
// when moving right, as d → a the v node of the previous cell is. Composition of the
// jump matrices is not commutative, so the two limits give different u0.

/// d → 0: u0 = [w0(1-v1)² + v0(1+w1)²]/(1+v1w1)², u1 = (v1+w1)/(1+v1w1).
MergedCouplings merge_d_to_zero(const TwoSpeciesParams& p);

/// d → a: u0 = [v0(1-w1)² + w0(1+v1)²]/(1+v1w1)², same u1.
MergedCouplings merge_d_to_a(const TwoSpeciesParams& p);

/// (w0, w1, v0, v1, d, a) → (v0, v1, w0, w1, a-d, a), which leaves F unchanged.
TwoSpeciesParams exchange_map(const TwoSpeciesParams& p);

}  // namespace hybridcomb
