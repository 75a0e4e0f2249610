#include "hybridcomb/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "hybridcomb/error.hpp"

namespace hybridcomb {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_nonzero(Momentum k) {
  if (k.is_zero()) throw Error(ErrorKind::DegenerateMomentum, "amplitudes are undefined at k = 0");
}

void require_no_pole(Complex denominator, Momentum k) {
  if (std::abs(denominator) < kPoleScale * (1.0 + std::abs(k.value()))) {
    throw Error(ErrorKind::PoleHit, "amplitude denominator vanishes (bound-state pole)");
  }
}

}  // namespace

Momentum Momentum::from_energy(double epsilon) {
  if (!std::isfinite(epsilon)) throw Error(ErrorKind::InvalidParameter, "energy must be finite");
  if (epsilon >= 0.0) return Momentum(Complex{std::sqrt(epsilon), 0.0});
  return Momentum(Complex{0.0, std::sqrt(-epsilon)});
}

Momentum Momentum::real(double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw Error(ErrorKind::InvalidParameter, "real momentum must be finite and >= 0");
  }
  return Momentum(Complex{k, 0.0});
}

Momentum Momentum::imaginary(double kappa) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorKind::InvalidParameter, "imaginary momentum must have finite kappa >= 0");
  }
  return Momentum(Complex{0.0, kappa});
}

ScatteringAmplitudes one_species_amplitudes(Momentum k, const OneSpeciesParams& p) {
  p.validate();
  require_nonzero(k);
  const Complex kk = k.value();
  const double w0 = p.w0;
  const double w1 = p.w1;

  const Complex denominator = (1.0 + w1 * w1) * kk + kI * (w0 / 2.0);
  require_no_pole(denominator, k);

  ScatteringAmplitudes s;
  s.k = k;
  s.t = (1.0 - w1) * (1.0 + w1) * kk / denominator;
  s.rR = -(2.0 * kk * w1 + kI * (w0 / 2.0)) / denominator;
  s.rL = (2.0 * kk * w1 - kI * (w0 / 2.0)) / denominator;
  return s;
}

ScatteringAmplitudes two_species_amplitudes(Momentum k, const TwoSpeciesParams& p) {
  p.validate();
  require_nonzero(k);
  const Complex kk = k.value();
  const double w0 = p.w0, w1 = p.w1, v0 = p.v0, v1 = p.v1, d = p.d;

  const Complex phase_plus = std::exp(kI * d * kk);   // e^{ikd}
  const Complex phase_minus = std::exp(-kI * d * kk); // e^{-ikd}

  const Complex v_even = 2.0 * kk * (v1 * v1 + 1.0);
  const Complex w_even = 2.0 * kk * (w1 * w1 + 1.0);

  const Complex delta = phase_plus * phase_plus * (4.0 * kk * v1 + kI * v0) * (4.0 * kk * w1 - kI * w0) +
                        (v_even + kI * v0) * (w_even + kI * w0);
  require_no_pole(delta, k);

  ScatteringAmplitudes s;
  s.k = k;
  s.t = 4.0 * kk * kk * (v1 - 1.0) * (v1 + 1.0) * (w1 - 1.0) * (w1 + 1.0) / delta;
  s.rR = -(phase_minus * (v_even + kI * v0) * (4.0 * kk * w1 + kI * w0) +
           phase_plus * (w_even - kI * w0) * (4.0 * kk * v1 + kI * v0)) /
         delta;
  s.rL = (phase_plus * (v_even - kI * v0) * (4.0 * kk * w1 - kI * w0) +
          phase_minus * (w_even + kI * w0) * (4.0 * kk * v1 - kI * v0)) /
         delta;
  return s;
}

double UnitarityResiduals::max() const noexcept {
  return std::max({left_column, right_column, overlap});
}

UnitarityResiduals unitarity_residuals(const ScatteringAmplitudes& s) {
  if (!s.k.is_real()) {
    throw Error(ErrorKind::NotApplicable, "unitarity holds only for real momenta");
  }
  if (s.k.is_zero()) throw Error(ErrorKind::DegenerateMomentum, "unitarity check at k = 0");
  UnitarityResiduals r;
  r.left_column = std::abs(std::norm(s.t) + std::norm(s.rL) - 1.0);
  r.right_column = std::abs(std::norm(s.t) + std::norm(s.rR) - 1.0);
  r.overlap = std::abs(s.t * std::conj(s.rR) + s.rL * std::conj(s.t));
  return r;
}

bool check_unitarity(const ScatteringAmplitudes& s, double tol) {
  return unitarity_residuals(s).max() < tol;
}

}  // namespace hybridcomb
