#pragma once

// Reference computations used only by the tests. They take deliberately different
// routes from the library: the monodromy trace instead of closed forms, dense grids
// instead of adaptive scans, finite differences instead of analytic derivatives.

#include <cmath>
#include <complex>
#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hybridcomb/params.hpp"
#include "hybridcomb/transfer.hpp"

namespace hybridcomb::testing {

/// Seeded generator for property tests. Draws are reproducible across runs.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  /// Uniform in [lo, hi] but at least `gap` away from ±1.
  double coupling_off_critical(double lo, double hi, double gap = 1e-3) {
    for (;;) {
      const double x = uniform(lo, hi);
      if (std::abs(std::abs(x) - 1.0) > gap) return x;
    }
  }

  OneSpeciesParams one_species(double w0_max = 15.0, double w1_max = 5.0, double a_lo = 1.0,
                               double a_hi = 1.0) {
    return {uniform(-w0_max, w0_max), coupling_off_critical(-w1_max, w1_max),
            a_lo == a_hi ? a_lo : uniform(a_lo, a_hi)};
  }

  TwoSpeciesParams two_species(double w0_max = 15.0, double w1_max = 5.0) {
    TwoSpeciesParams p;
    p.w0 = uniform(-w0_max, w0_max);
    p.w1 = coupling_off_critical(-w1_max, w1_max);
    p.v0 = uniform(-w0_max, w0_max);
    p.v1 = coupling_off_critical(-w1_max, w1_max);
    p.a = 1.0;
    p.d = uniform(0.02, 0.98);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

/// Bloch function from the transfer-matrix route.
inline double trace_F(double epsilon, const CombParams& p) { return monodromy(epsilon, p).half_trace(); }

/// One-species F written directly with std::complex, no series, no shared kernels.
inline double direct_one_species_F(double epsilon, const OneSpeciesParams& p) {
  const std::complex<double> k = std::sqrt(std::complex<double>(epsilon, 0.0));
  const double f = (1.0 + p.w1 * p.w1) / (1.0 - p.w1 * p.w1);
  const double h = 1.0 / (1.0 + p.w1 * p.w1);
  const auto ka = k * p.a;
  const auto value = f * (std::cos(ka) + 0.5 * p.a * p.w0 * h * std::sin(ka) / ka);
  return value.real();
}

template <class Fn>
double central_difference(Fn&& fn, double x, double h) {
  return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

/// Roots of |trace_F| = 1 on a dense uniform grid, refined by plain bisection.
/// Misses tangencies by construction; callers compare against non-touching edges only.
inline std::vector<double> brute_force_edges(const CombParams& p, double lo, double hi,
                                             std::size_t n_grid) {
  std::vector<double> roots;
  auto g_plus = [&](double e) { return trace_F(e, p) - 1.0; };
  auto g_minus = [&](double e) { return trace_F(e, p) + 1.0; };
  const double step = (hi - lo) / static_cast<double>(n_grid);
  for (auto g : {+1, -1}) {
    auto fn = [&](double e) { return g > 0 ? g_plus(e) : g_minus(e); };
    double x0 = lo;
    double f0 = fn(x0);
    for (std::size_t i = 1; i <= n_grid; ++i) {
      const double x1 = lo + step * static_cast<double>(i);
      const double f1 = fn(x1);
      if ((f0 > 0.0) != (f1 > 0.0)) {
        double a = x0, b = x1, fa = f0;
        for (int it = 0; it < 200 && b - a > 1e-13 * (1.0 + std::abs(a)); ++it) {
          const double m = 0.5 * (a + b);
          const double fm = fn(m);
          if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
          } else {
            b = m;
          }
        }
        roots.push_back(0.5 * (a + b));
      }
      x0 = x1;
      f0 = f1;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Allowed measure in [lo, hi] from a dense midpoint grid of |trace_F| <= 1.
inline double brute_force_allowed_measure(const CombParams& p, double lo, double hi,
                                          std::size_t n_grid) {
  const double step = (hi - lo) / static_cast<double>(n_grid);
  std::size_t allowed = 0;
  for (std::size_t i = 0; i < n_grid; ++i) {
    if (std::abs(trace_F(lo + step * (static_cast<double>(i) + 0.5), p)) <= 1.0) ++allowed;
  }
  return step * static_cast<double>(allowed);
}

/// Positive roots of tan(x)/x = c, x = k·a, found by scanning x on a fine grid and
/// bisecting sin(x) - c·x·cos(x), which has no poles.
inline std::vector<double> tan_ratio_roots(double c, std::size_t count, double x_max) {
  std::vector<double> roots;
  auto g = [c](double x) { return std::sin(x) - c * x * std::cos(x); };
  const double step = 1e-4;
  double x0 = 1e-6;
  double g0 = g(x0);
  while (roots.size() < count && x0 < x_max) {
    const double x1 = x0 + step;
    const double g1 = g(x1);
    if ((g0 > 0.0) != (g1 > 0.0)) {
      double a = x0, b = x1, ga = g0;
      for (int it = 0; it < 100; ++it) {
        const double m = 0.5 * (a + b);
        const double gm = g(m);
        if ((gm > 0.0) == (ga > 0.0)) {
          a = m;
          ga = gm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    x0 = x1;
    g0 = g1;
  }
  return roots;
}

}  // namespace hybridcomb::testing
