#include "hybridcomb/units.hpp"

#include <cmath>

#include "hybridcomb/error.hpp"

namespace hybridcomb {

OneSpeciesParams to_dimensionless(const PhysicalUnitsSpec& spec) {
  if (!(spec.mass > 0.0) || !std::isfinite(spec.mass)) {
    throw Error(ErrorKind::NonPositiveInput, "mass must be finite and > 0");
  }
  if (!(spec.y0 > 0.0) || !std::isfinite(spec.y0)) {
    throw Error(ErrorKind::NonPositiveInput, "spacing y0 must be finite and > 0");
  }
  if (!std::isfinite(spec.mu) || !std::isfinite(spec.lambda)) {
    throw Error(ErrorKind::InvalidParameter, "couplings must be finite");
  }
  // ħ²/m for the particle, and its inverse reduced Compton wavelength mc/ħ = mc²/(ħc).
  const double hbar2_over_m = kElectronHbar2OverMass / spec.mass;
  const double inverse_compton = kHbarC / hbar2_over_m;
  return OneSpeciesParams{2.0 * spec.mu / kHbarC, spec.lambda / hbar2_over_m,
                          spec.y0 * inverse_compton};
}

}  // namespace hybridcomb
