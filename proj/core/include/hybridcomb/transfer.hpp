#pragma once

#include "hybridcomb/params.hpp"
#include "hybridcomb/scattering.hpp"

namespace hybridcomb {

/// Real 2×2 matrix acting on (ψ, ψ′). Every matrix built here is unimodular.
struct TransferMatrix {
  double m11 = 1.0;
  double m12 = 0.0;
  double m21 = 0.0;
  double m22 = 1.0;

  static TransferMatrix identity() noexcept { return {}; }

  double det() const noexcept { return m11 * m22 - m12 * m21; }
  double trace() const noexcept { return m11 + m22; }
  /// Bloch condition: cos(qa) = Tr(M)/2 for a unit-cell monodromy.
  double half_trace() const noexcept { return 0.5 * trace(); }

  friend TransferMatrix operator*(const TransferMatrix& lhs, const TransferMatrix& rhs) noexcept;
};

/// Matching conditions across a δ–δ′ node: (ψ, ψ′)(0⁺) = [[α, 0], [β, 1/α]]·(ψ, ψ′)(0⁻)
/// with α = (1+w1)/(1-w1), β = w0/(1-w1²). Throws OpaqueRegime at w1 = ±1.
TransferMatrix jump_matrix(double w0, double w1);

/// Free evolution over a length L > 0 at energy ε; hyperbolic for ε < 0.
TransferMatrix propagation_matrix(double epsilon, double length);

/// J(w0, w1)·P(ε, a).
TransferMatrix monodromy_one_species(double epsilon, const OneSpeciesParams& p);

/// J(v0, v1)·P(ε, d)·J(w0, w1)·P(ε, a-d).
TransferMatrix monodromy_two_species(double epsilon, const TwoSpeciesParams& p);

TransferMatrix monodromy(double epsilon, const CombParams& p);

/// Scattering amplitudes of a point interaction described by `jump`, matching
/// e^{ikx} + rR·e^{-ikx} | t·e^{ikx} and t·e^{-ikx} | e^{-ikx} + rL·e^{ikx} across it.
/// Requires real k ≠ 0; throws SingularConversion when the matching system degenerates.
ScatteringAmplitudes scattering_from_jump(Momentum k, const TransferMatrix& jump);

}  // namespace hybridcomb
