#pragma once

#include "hybridcomb/params.hpp"

namespace hybridcomb {

inline constexpr double kHbarC = 1973.27;                 // eV·Å
inline constexpr double kElectronHbar2OverMass = 7.62;     // eV·Å²

/// Physical inputs; mass is in electron masses.
struct PhysicalUnitsSpec {
  double mu = 0.0;      // δ strength, eV·Å
  double lambda = 0.0;  // δ′ strength, eV·Å²
  double y0 = 1.0;      // node spacing, Å
  double mass = 1.0;
};

/// w0 = 2μ/(ħc), w1 = mλ/ħ², a = y0·mc/ħ. Throws NonPositiveInput unless mass, y0 > 0.
OneSpeciesParams to_dimensionless(const PhysicalUnitsSpec& spec);

}  // namespace hybridcomb
