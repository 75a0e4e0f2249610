#pragma once

#include <cmath>
#include <limits>

#include "hybridcomb/params.hpp"
#include "hybridcomb/scattering.hpp"

namespace hybridcomb {

/// Below |ε|·L² = kSeriesThreshold the cos/sinc kernels switch to Taylor series.
inline constexpr double kSeriesThreshold = 1e-6;

/// One evaluation of the band function F, where cos(qa) = F(ε).
struct SecularValue {
  double epsilon = 0.0;
  double F = 0.0;
  double dF = std::numeric_limits<double>::quiet_NaN();  // dF/dε; NaN when not computed
  double imag_residual = 0.0;

  /// Allowed energies satisfy |F| <= 1.
  bool allowed() const noexcept { return std::abs(F) <= 1.0; }
};

/// Band function from arbitrary scattering data:
///   F = [e^{iak}(t² - rL·rR) + e^{-iak}] / (2t).
/// Equivalent to tr(S)·cos(qa) = e^{-iak} + det(S)·e^{iak}. `k` must match `s.k`.
/// Throws OpaqueRegime when |t| vanishes. dF is left as NaN.
SecularValue secular_generic(Momentum k, const ScatteringAmplitudes& s, double a);

/// One-species comb, F = f(w1)[cos(a√ε) + (a·w0/2)·h(w1)·sin(a√ε)/(a√ε)] with
/// f = (1+w1²)/(1-w1²), h = 1/(1+w1²). Valid on both signs of ε.
SecularValue secular_one_species(double epsilon, const OneSpeciesParams& p);

/// Two-species comb, closed form in terms of f, h of both δ′ couplings.
/// Exactly invariant under (w, v, d) → (v, w, a - d).
SecularValue secular_two_species(double epsilon, const TwoSpeciesParams& p);

SecularValue secular(double epsilon, const CombParams& p);

/// |dF_closed - central difference| with step h; ε ± h must not straddle 0.
double secular_derivative_check(double epsilon, const CombParams& p, double h);

}  // namespace hybridcomb
