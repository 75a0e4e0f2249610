#include "hybridcomb/params.hpp"

#include <cmath>
#include <sstream>

#include "hybridcomb/error.hpp"

namespace hybridcomb {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidParameter, std::string(name) + " must be finite");
  }
}

}  // namespace

bool is_critical_coupling(double w1) noexcept {
  return std::abs(w1 - 1.0) < kCriticalTolerance || std::abs(w1 + 1.0) < kCriticalTolerance;
}

void OneSpeciesParams::validate() const {
  require_finite(w0, "w0");
  require_finite(w1, "w1");
  require_finite(a, "a");
  if (a <= 0.0) throw Error(ErrorKind::InvalidParameter, "lattice spacing a must be > 0");
}

void TwoSpeciesParams::validate() const {
  require_finite(w0, "w0");
  require_finite(w1, "w1");
  require_finite(v0, "v0");
  require_finite(v1, "v1");
  require_finite(d, "d");
  require_finite(a, "a");
  if (a <= 0.0) throw Error(ErrorKind::InvalidParameter, "lattice spacing a must be > 0");
  if (!(d > 0.0 && d < a)) {
    throw Error(ErrorKind::InvalidParameter, "displacement d must satisfy 0 < d < a");
  }
}

double lattice_spacing(const CombParams& params) noexcept {
  return std::visit([](const auto& p) { return p.a; }, params);
}

bool is_opaque(const CombParams& params) noexcept {
  return std::visit([](const auto& p) { return p.is_opaque(); }, params);
}

void validate(const CombParams& params) {
  std::visit([](const auto& p) { p.validate(); }, params);
}

void require_band_mode(const CombParams& params) {
  validate(params);
  if (is_opaque(params)) {
    throw Error(ErrorKind::OpaqueRegime,
                "a δ′ coupling equals ±1; the spectrum is discrete (use the critical-spectrum "
                "solver)");
  }
}

std::string describe(const CombParams& params) {
  std::ostringstream os;
  os.precision(17);
  if (const auto* one = std::get_if<OneSpeciesParams>(&params)) {
    os << "one-species(w0=" << one->w0 << ", w1=" << one->w1 << ", a=" << one->a << ")";
  } else {
    const auto& two = std::get<TwoSpeciesParams>(params);
    os << "two-species(w0=" << two.w0 << ", w1=" << two.w1 << ", v0=" << two.v0
       << ", v1=" << two.v1 << ", d=" << two.d << ", a=" << two.a << ")";
  }
  return os.str();
}

}  // namespace hybridcomb
