#include "kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "hybridcomb/secular.hpp"

namespace hybridcomb::detail {

FreeKernel free_kernel(double epsilon, double length) {
  FreeKernel out;
  const double x = epsilon * length * length;

  if (std::abs(x) < kSeriesThreshold) {
    // Taylor series in x = εL² through x⁴; the closed forms below cancel catastrophically here.
    const double x2 = x * x, x3 = x2 * x, x4 = x3 * x;
    out.c = 1.0 - x / 2.0 + x2 / 24.0 - x3 / 720.0 + x4 / 40320.0;
    out.s = length * (1.0 - x / 6.0 + x2 / 120.0 - x3 / 5040.0 + x4 / 362880.0);
    const double l3 = length * length * length;
    out.ds = l3 * (-1.0 / 6.0 + 2.0 * x / 120.0 - 3.0 * x2 / 5040.0 + 4.0 * x3 / 362880.0 -
                   5.0 * x4 / 39916800.0);
    out.dc = -0.5 * length * out.s;
    return out;
  }

  const std::complex<double> k = std::sqrt(std::complex<double>(epsilon, 0.0));
  const std::complex<double> c = std::cos(k * length);
  const std::complex<double> s = std::sin(k * length) / k;
  out.c = c.real();
  out.s = s.real();
  out.imag = std::max(std::abs(c.imag()), std::abs(s.imag()));
  out.dc = -0.5 * length * out.s;
  out.ds = (length * out.c - out.s) / (2.0 * epsilon);
  return out;
}

}  // namespace hybridcomb::detail
