#include "hybridcomb/transfer.hpp"

#include <cmath>
#include <variant>

#include "hybridcomb/error.hpp"

namespace hybridcomb {

TransferMatrix operator*(const TransferMatrix& lhs, const TransferMatrix& rhs) noexcept {
  return {lhs.m11 * rhs.m11 + lhs.m12 * rhs.m21, lhs.m11 * rhs.m12 + lhs.m12 * rhs.m22,
          lhs.m21 * rhs.m11 + lhs.m22 * rhs.m21, lhs.m21 * rhs.m12 + lhs.m22 * rhs.m22};
}

TransferMatrix jump_matrix(double w0, double w1) {
  if (!std::isfinite(w0) || !std::isfinite(w1)) {
    throw Error(ErrorKind::InvalidParameter, "couplings must be finite");
  }
  if (is_critical_coupling(w1)) {
    throw Error(ErrorKind::OpaqueRegime, "jump matrix is singular at w1 = ±1");
  }
  const double alpha = (1.0 + w1) / (1.0 - w1);
  const double beta = w0 / ((1.0 - w1) * (1.0 + w1));
  return {alpha, 0.0, beta, 1.0 / alpha};
}

TransferMatrix propagation_matrix(double epsilon, double length) {
  if (!(length > 0.0) || !std::isfinite(length) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::InvalidParameter, "propagation needs finite energy and length > 0");
  }
  // Real-arithmetic branches, kept separate from the secular kernels so the oracle stays independent.
  const double x = epsilon * length * length;
  double c = 0.0;
  double s = 0.0;  // sin(kL)/k, or sinh(κL)/κ
  if (std::abs(x) < 1e-8) {
    c = 1.0 - x / 2.0 + x * x / 24.0;
    s = length * (1.0 - x / 6.0 + x * x / 120.0);
  } else if (epsilon > 0.0) {
    const double k = std::sqrt(epsilon);
    c = std::cos(k * length);
    s = std::sin(k * length) / k;
  } else {
    const double kappa = std::sqrt(-epsilon);
    c = std::cosh(kappa * length);
    s = std::sinh(kappa * length) / kappa;
  }
  return {c, s, -epsilon * s, c};
}

TransferMatrix monodromy_one_species(double epsilon, const OneSpeciesParams& p) {
  require_band_mode(p);
  return jump_matrix(p.w0, p.w1) * propagation_matrix(epsilon, p.a);
}

TransferMatrix monodromy_two_species(double epsilon, const TwoSpeciesParams& p) {
  require_band_mode(p);
  return jump_matrix(p.v0, p.v1) * propagation_matrix(epsilon, p.d) * jump_matrix(p.w0, p.w1) *
         propagation_matrix(epsilon, p.a - p.d);
}

TransferMatrix monodromy(double epsilon, const CombParams& p) {
  if (const auto* one = std::get_if<OneSpeciesParams>(&p)) return monodromy_one_species(epsilon, *one);
  return monodromy_two_species(epsilon, std::get<TwoSpeciesParams>(p));
}

ScatteringAmplitudes scattering_from_jump(Momentum k, const TransferMatrix& jump) {
  if (k.is_zero()) throw Error(ErrorKind::DegenerateMomentum, "conversion undefined at k = 0");
  if (!k.is_real()) throw Error(ErrorKind::NotApplicable, "conversion requires a real momentum");

  const Complex ik{0.0, k.value().real()};
  // Unknown column (ψ₀, ψ₀′) on the left of the node maps to the right side through `jump`.
  // Right incidence: left state (1 + rR, ik(1 - rR)), right state (t, ik·t).
  // Left incidence:  left state (t, -ik·t),            right state (1 + rL, ik(rL - 1)).
  // Both reduce to the same 2×2 system with matrix A = [[J11 - ik·J12, -1], [J21 - ik·J22, -ik]].
  const Complex a11 = jump.m11 - ik * jump.m12;
  const Complex a21 = jump.m21 - ik * jump.m22;
  const Complex det = -ik * a11 + a21;
  if (std::abs(det) < 1e-14 * (1.0 + std::abs(a11) + std::abs(a21))) {
    throw Error(ErrorKind::SingularConversion, "matching system is degenerate");
  }
  auto solve = [&](Complex b1, Complex b2) {
    // [[a11, -1], [a21, -ik]]·(x, y) = (b1, b2)
    const Complex x = (-ik * b1 + b2) / det;
    const Complex y = (a11 * b2 - a21 * b1) / det;
    return std::pair{x, y};
  };

  // Right incidence: a11·rR - t = -(J11 + ik·J12), a21·rR - ik·t = -(J21 + ik·J22).
  const auto [rR, t] = solve(-(jump.m11 + ik * jump.m12), -(jump.m21 + ik * jump.m22));
  // Left incidence: a11·t - rL = 1, a21·t - ik·rL = -ik.
  const auto [t_left, rL] = solve(Complex{1.0, 0.0}, -ik);
  (void)t_left;

  return ScatteringAmplitudes{t, rR, rL, k};
}

}  // namespace hybridcomb
