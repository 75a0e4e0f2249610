#include "hybridcomb/dos.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hybridcomb/error.hpp"
#include "hybridcomb/secular.hpp"

namespace hybridcomb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dos_value(const SecularValue& v) {
  const double excess = std::abs(v.F) - 1.0;
  if (excess > 0.0) return 0.0;
  if (excess == 0.0) return kInf;
  // 1 - F² written as (1 - F)(1 + F) keeps precision close to the edges.
  return std::abs(v.dF) / (std::numbers::pi * std::sqrt((1.0 - v.F) * (1.0 + v.F)));
}

}  // namespace

void OccupationSpec::validate() const {
  if (!std::isfinite(mu)) throw Error(ErrorKind::InvalidParameter, "chemical potential must be finite");
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw Error(ErrorKind::InvalidParameter, "temperature must be finite and > 0");
  }
}

DosSample density_of_states(double epsilon, const CombParams& p) {
  const SecularValue v = secular(epsilon, p);
  return DosSample{epsilon, dos_value(v), std::nullopt};
}

double dos_band_integral(const Band& band, const CombParams& p, std::size_t max_panels) {
  const double lo = band.lower.epsilon;
  const double hi = band.upper.epsilon;
  if (!(hi > lo)) throw Error(ErrorKind::InvalidParameter, "band must have positive width");
  if (max_panels < 1) throw Error(ErrorKind::InvalidParameter, "need at least one quadrature panel");

  const double half_width = 0.5 * (hi - lo);
  // ε(θ) = lo + (hi - lo)(1 - cos θ)/2 turns both 1/√ edge singularities into bounded integrands.
  auto integrand = [&](double theta) {
    const double eps = lo + half_width * (1.0 - std::cos(theta));
    const double g = dos_value(secular(eps, p));
    // |F| rounds to exactly 1 only next to a tangency (coincident edges), where the true
    // integrand stays finite; dropping that node costs far less than the tolerance.
    if (!std::isfinite(g)) return 0.0;
    return g * half_width * std::sin(theta);
  };
  auto composite = [&](std::size_t panels) {
    const double h = std::numbers::pi / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
      const double t0 = h * static_cast<double>(i);
      sum += boost::math::quadrature::gauss<double, 20>::integrate(integrand, t0, t0 + h);
    }
    return sum;
  };

  double previous = composite(1);
  double current = previous;
  for (std::size_t panels = 2; panels <= max_panels; panels *= 2) {
    current = composite(panels);
    if (std::abs(current - previous) < 1e-12) break;
    previous = current;
  }
  if (!(std::abs(current - 1.0) <= kNormalizationTolerance)) {
    throw Error(ErrorKind::QuadratureFailure,
                "band integral " + std::to_string(current) + " differs from 1 beyond tolerance");
  }
  return current;
}

DosSample occupation(DosSample sample, const OccupationSpec& spec) {
  spec.validate();
  const double x = (sample.epsilon - spec.mu) / spec.temperature;
  double factor = 0.0;
  if (spec.statistics == Statistics::FermiDirac) {
    // Rearranged so that neither branch exponentiates a large positive number.
    factor = x > 0.0 ? std::exp(-x) / (1.0 + std::exp(-x)) : 1.0 / (1.0 + std::exp(x));
  } else {
    if (!(x > 0.0)) {
      throw Error(ErrorKind::BoseDivergence, "Bose-Einstein occupation requires epsilon > mu");
    }
    factor = x > 700.0 ? std::exp(-x) : 1.0 / std::expm1(x);
  }
  sample.occupation = factor == 0.0 ? 0.0 : sample.g * factor;
  return sample;
}

}  // namespace hybridcomb
