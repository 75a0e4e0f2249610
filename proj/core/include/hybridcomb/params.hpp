#pragma once

#include <string>
#include <variant>

namespace hybridcomb {

/// Distance from w1 = ±1 below which a δ′ coupling is treated as opaque.
inline constexpr double kCriticalTolerance = 1e-9;

/// True when |w1 - 1| or |w1 + 1| is below kCriticalTolerance.
bool is_critical_coupling(double w1) noexcept;

/// Identical δ–δ′ nodes at x = n·a. Energies in units of mc²/2, lengths in ħ/mc.
struct OneSpeciesParams {
  double w0 = 0.0;
  double w1 = 0.0;
  double a = 1.0;

  bool is_opaque() const noexcept { return is_critical_coupling(w1); }

  /// Throws Error(InvalidParameter) unless every field is finite and a > 0.
  void validate() const;
};

/// Two δ–δ′ pairs per cell: (w0, w1) at -d/2 and (v0, v1) at +d/2.
struct TwoSpeciesParams {
  double w0 = 0.0;
  double w1 = 0.0;
  double v0 = 0.0;
  double v1 = 0.0;
  double d = 0.5;
  double a = 1.0;

  bool is_opaque() const noexcept { return is_critical_coupling(w1) || is_critical_coupling(v1); }

  /// Throws Error(InvalidParameter) unless fields are finite and 0 < d < a.
  void validate() const;
};

using CombParams = std::variant<OneSpeciesParams, TwoSpeciesParams>;

double lattice_spacing(const CombParams& params) noexcept;
bool is_opaque(const CombParams& params) noexcept;
void validate(const CombParams& params);

/// Validates and rejects opaque couplings, which have no band function.
void require_band_mode(const CombParams& params);

std::string describe(const CombParams& params);

}  // namespace hybridcomb
