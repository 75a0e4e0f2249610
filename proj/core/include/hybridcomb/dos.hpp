#pragma once

#include <cstddef>
#include <optional>

#include "hybridcomb/bands.hpp"
#include "hybridcomb/params.hpp"

namespace hybridcomb {

/// Allowed deviation of a band integral from one state per cell.
inline constexpr double kNormalizationTolerance = 1e-3;
inline constexpr std::size_t kDefaultQuadraturePanels = 512;

struct DosSample {
  double epsilon = 0.0;
  /// States per unit ε per cell; +infinity exactly at a band edge.
  double g = 0.0;
  std::optional<double> occupation;
};

enum class Statistics { FermiDirac, BoseEinstein };

/// Temperatures absorb Boltzmann's constant: the occupation argument is (ε - μ)/T.
struct OccupationSpec {
  Statistics statistics = Statistics::FermiDirac;
  double mu = 0.0;
  double temperature = 1.0;

  void validate() const;
};

/// g(ε) = |F′(ε)| / (π·√(1 - F²)) inside a band, 0 in a gap.
DosSample density_of_states(double epsilon, const CombParams& p);

/// ∫ g dε over one band. Each endpoint singularity is removed with ε = lo + (hi-lo)(1-cos θ)/2,
/// then Gauss-Legendre panels are doubled up to max_panels. Throws QuadratureFailure when the
/// result still misses 1 by more than kNormalizationTolerance.
double dos_band_integral(const Band& band, const CombParams& p,
                         std::size_t max_panels = kDefaultQuadraturePanels);

/// Attaches g/(e^{(ε-μ)/T} ± 1). Throws BoseDivergence when ε <= μ for Bose-Einstein.
DosSample occupation(DosSample sample, const OccupationSpec& spec);

}  // namespace hybridcomb
