#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hybridcomb/params.hpp"

namespace hybridcomb {

/// Scan points per interval π/a of √ε (signed for negative energies).
inline constexpr int kDefaultScanPerBand = 64;
/// Absolute bisection tolerance on band-edge energies.
inline constexpr double kDefaultEdgeTolerance = 1e-10;
/// A critical point of F closer than this to ±1 is reported as a zero-width gap.
inline constexpr double kTouchTolerance = 1e-12;

enum class EdgeSign : int { Minus = -1, Plus = 1 };

/// A root of |F(ε)| = 1.
struct BandEdge {
  double epsilon = 0.0;
  EdgeSign edge_sign = EdgeSign::Plus;
  double bracket_lo = 0.0;  // final bisection interval
  double bracket_hi = 0.0;
  /// F is tangent to ±1 here: a coincident edge pair with no gap between the two bands.
  bool touching = false;
};

struct DispersionSample {
  double q = 0.0;  // quasi-momentum in [0, π/a]
  double epsilon = 0.0;
};

/// One allowed band ε_n(q); only q >= 0 is stored since ε_n(-q) = ε_n(q).
struct Band {
  std::size_t index = 0;
  BandEdge lower;
  BandEdge upper;
  std::vector<DispersionSample> samples;  // strictly increasing q
  int curvature_sign = 0;                 // sign of d²ε/dq² at q = 0

  double width() const noexcept { return upper.epsilon - lower.epsilon; }
  double midpoint() const noexcept { return 0.5 * (lower.epsilon + upper.epsilon); }
};

/// Closed interval of energies; used for allowed ranges and gaps.
struct EnergyInterval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const noexcept { return hi - lo; }
};

/// Lower scan limit placed below every negative-energy band of `p`.
double default_eps_min(const CombParams& p);

/// Every root of F = ±1 in [eps_min, eps_max], sorted by energy.
/// Scans uniformly in signed √ε with n_scan points per π/a, splits scan cells at critical
/// points of F, and bisects each bracket to tol_edge. Throws OpaqueRegime or ScanTooCoarse.
std::vector<BandEdge> find_band_edges(const CombParams& p, double eps_min, double eps_max,
                                      int n_scan = kDefaultScanPerBand,
                                      double tol_edge = kDefaultEdgeTolerance);

/// Allowed ranges within the window, clipped to it (possibly open at either end).
std::vector<EnergyInterval> allowed_intervals(const CombParams& p, double eps_min, double eps_max,
                                              int n_scan = kDefaultScanPerBand,
                                              double tol_edge = kDefaultEdgeTolerance);

/// Total length of forbidden energies inside [lo, hi].
double forbidden_measure(const CombParams& p, double lo, double hi,
                         int n_scan = kDefaultScanPerBand,
                         double tol_edge = kDefaultEdgeTolerance);

/// Bands fully contained in the window, indexed from 0 in increasing energy, each sampled
/// with n_samples points (n_samples >= 2) of q(ε) = arccos(F(ε))/a.
std::vector<Band> enumerate_bands(const CombParams& p, double eps_min, double eps_max,
                                  int n_scan = kDefaultScanPerBand,
                                  double tol_edge = kDefaultEdgeTolerance,
                                  std::size_t n_samples = 65);

/// Gaps between consecutive bands of an enumerate_bands result.
std::vector<EnergyInterval> band_gaps(const std::vector<Band>& bands);

/// First `count` energies k² of the opaque comb (|w1| = 1), where
/// tan(ka)/(ka) = -4/(w0·a), one root per branch of tan. Throws NotCritical otherwise.
std::vector<double> discrete_spectrum_critical(const OneSpeciesParams& p, std::size_t count,
                                               double tol_edge = kDefaultEdgeTolerance);

enum class NegativeBandRegime {
  Straddling,               // 0 < |w0|a < 4: the lowest band contains ε = 0
  Detached,                 // 4 < |w0|a < 6: lowest band entirely negative
  DetachedWithInteriorMax,  // |w0|a > 6: F(iκ) has a maximum at κ = 0 and a minimum at κ₀ > 0
};

struct NegativeBandReport {
  NegativeBandRegime regime = NegativeBandRegime::Straddling;
  BandEdge lower;
  BandEdge upper;
  std::optional<double> kappa0;
};

/// Classifies the lowest band of an attractive pure-δ comb (w1 = 0, w0 < 0) from the
/// located edges and critical points. Throws InvalidRegime otherwise.
NegativeBandReport classify_negative_band(const OneSpeciesParams& p);

}  // namespace hybridcomb
