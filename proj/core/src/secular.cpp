#include "hybridcomb/secular.hpp"

#include <algorithm>
#include <variant>

#include "hybridcomb/error.hpp"
#include "kernels.hpp"

namespace hybridcomb {

namespace {

constexpr Complex kI{0.0, 1.0};

// 1 - w1² is formed as a product so it keeps full relative precision near w1 = ±1.
double f_factor(double w1) { return (1.0 + w1 * w1) / ((1.0 - w1) * (1.0 + w1)); }
double h_factor(double w1) { return 1.0 / (1.0 + w1 * w1); }

void require_finite_energy(double epsilon) {
  if (!std::isfinite(epsilon)) throw Error(ErrorKind::InvalidParameter, "energy must be finite");
}

}  // namespace

SecularValue secular_generic(Momentum k, const ScatteringAmplitudes& s, double a) {
  if (s.k.value() != k.value()) {
    throw Error(ErrorKind::InvalidParameter, "scattering data evaluated at a different momentum");
  }
  if (!(a > 0.0)) throw Error(ErrorKind::InvalidParameter, "lattice spacing a must be > 0");
  const Complex kk = k.value();
  if (std::abs(s.t) < kPoleScale * (1.0 + std::abs(kk))) {
    throw Error(ErrorKind::OpaqueRegime, "transmission vanishes; band function undefined");
  }
  const Complex F = (std::exp(kI * a * kk) * (s.t * s.t - s.rL * s.rR) + std::exp(-kI * a * kk)) /
                    (2.0 * s.t);
  SecularValue v;
  v.epsilon = k.energy();
  v.F = F.real();
  v.imag_residual = std::abs(F.imag());
  return v;
}

SecularValue secular_one_species(double epsilon, const OneSpeciesParams& p) {
  require_band_mode(p);
  require_finite_energy(epsilon);
  const auto kern = detail::free_kernel(epsilon, p.a);
  const double f = f_factor(p.w1);
  const double g = 0.5 * p.w0 * h_factor(p.w1);

  SecularValue v;
  v.epsilon = epsilon;
  v.F = f * (kern.c + g * kern.s);
  v.dF = f * (kern.dc + g * kern.ds);
  v.imag_residual = std::abs(f) * kern.imag * (1.0 + std::abs(g));
  return v;
}

SecularValue secular_two_species(double epsilon, const TwoSpeciesParams& given) {
  require_band_mode(given);
  require_finite_energy(epsilon);
  // (w, v, d) and (v, w, a - d) describe the same lattice. Evaluating with d >= a/2, where
  // a - d is exact, makes F bitwise identical for both descriptions.
  const TwoSpeciesParams p = given.d >= 0.5 * given.a
                                 ? given
                                 : TwoSpeciesParams{given.v0, given.v1, given.w0, given.w1, given.a - given.d, given.a};
  const double hw = h_factor(p.w1);
  const double hv = h_factor(p.v1);
  const double hh = hw * hv;
  const double prefactor = f_factor(p.w1) * f_factor(p.v1);

  const auto full = detail::free_kernel(epsilon, p.a);
  const auto offset = detail::free_kernel(epsilon, p.a - 2.0 * p.d);
  const auto left = detail::free_kernel(epsilon, p.a - p.d);
  const auto right = detail::free_kernel(epsilon, p.d);

  const double c_sin_a = 0.5 * (p.w0 * hw + p.v0 * hv);
  const double c_sin_offset = (p.v0 * p.w1 - p.v1 * p.w0) * hh;
  const double c_cos_offset = 4.0 * p.w1 * p.v1 * hh;
  // (w0·v0·hh/4)·[cos(k(a-2d)) - cos(ka)]/k² = (w0·v0·hh/2)·S(a-d)·S(d)
  const double c_product = 0.5 * p.w0 * p.v0 * hh;

  const double bracket = c_sin_a * full.s + c_sin_offset * offset.s + full.c +
                         c_cos_offset * offset.c + c_product * left.s * right.s;
  const double dbracket = c_sin_a * full.ds + c_sin_offset * offset.ds + full.dc +
                          c_cos_offset * offset.dc +
                          c_product * (left.ds * right.s + left.s * right.ds);

  SecularValue v;
  v.epsilon = epsilon;
  v.F = prefactor * bracket;
  v.dF = prefactor * dbracket;
  const double scale = 1.0 + std::abs(c_sin_a) + std::abs(c_sin_offset) + std::abs(c_cos_offset) +
                       std::abs(c_product) * (1.0 + std::abs(left.s) + std::abs(right.s));
  v.imag_residual = std::abs(prefactor) * scale *
                    std::max({full.imag, offset.imag, left.imag, right.imag});
  return v;
}

SecularValue secular(double epsilon, const CombParams& p) {
  return std::visit(
      [epsilon](const auto& params) -> SecularValue {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, OneSpeciesParams>) {
          return secular_one_species(epsilon, params);
        } else {
          return secular_two_species(epsilon, params);
        }
      },
      p);
}

double secular_derivative_check(double epsilon, const CombParams& p, double h) {
  const double closed = secular(epsilon, p).dF;
  const double forward = secular(epsilon + h, p).F;
  const double backward = secular(epsilon - h, p).F;
  return std::abs(closed - (forward - backward) / (2.0 * h));
}

}  // namespace hybridcomb
