#pragma once

#include <complex>

#include "hybridcomb/params.hpp"

namespace hybridcomb {

using Complex = std::complex<double>;

/// Relative scale for detecting a vanishing amplitude denominator: |D| < kPoleScale·(1+|k|).
inline constexpr double kPoleScale = 1e-12;

/// Complex wavenumber with ε = k². Real k ≥ 0 for ε ≥ 0, k = iκ (κ > 0) for ε < 0.
class Momentum {
 public:
  Momentum() = default;

  static Momentum from_energy(double epsilon);
  static Momentum real(double k);
  static Momentum imaginary(double kappa);

  Complex value() const noexcept { return k_; }
  double energy() const noexcept { return (k_ * k_).real(); }
  bool is_zero() const noexcept { return k_ == Complex{}; }
  bool is_real() const noexcept { return k_.imag() == 0.0; }

 private:
  explicit Momentum(Complex k) : k_(k) {}
  Complex k_{};
};

/// Transmission and right/left reflection amplitudes at one momentum.
/// Time reversal makes t_R = t_L, so a single t is stored.
struct ScatteringAmplitudes {
  Complex t;
  Complex rR;
  Complex rL;
  Momentum k;
};

/// Single δ–δ′ node, w0·δ(x) + 2w1·δ′(x).
/// Throws DegenerateMomentum at k = 0 and PoleHit at a bound-state pole.
ScatteringAmplitudes one_species_amplitudes(Momentum k, const OneSpeciesParams& p);

/// Pair of nodes, (w0, w1) at -d/2 and (v0, v1) at +d/2, phases referred to x = 0.
ScatteringAmplitudes two_species_amplitudes(Momentum k, const TwoSpeciesParams& p);

/// Deviations of S = [[t, rR], [rL, t]] from having orthonormal columns.
struct UnitarityResiduals {
  double left_column = 0.0;   // ||t|² + |rL|² - 1|
  double right_column = 0.0;  // ||t|² + |rR|² - 1|
  double overlap = 0.0;       // |t·conj(rR) + rL·conj(t)|

  double max() const noexcept;
};

/// Requires real, nonzero k; throws NotApplicable for imaginary momenta.
UnitarityResiduals unitarity_residuals(const ScatteringAmplitudes& s);

bool check_unitarity(const ScatteringAmplitudes& s, double tol);

}  // namespace hybridcomb
