#include "hybridcomb/bands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <variant>

#include "hybridcomb/error.hpp"
#include "hybridcomb/secular.hpp"

namespace hybridcomb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxScanNodes = 50'000'000;
constexpr int kMaxBisections = 400;

struct Node {
  double eps;
  double F;
  double dF;
};

Node evaluate(const CombParams& p, double eps) {
  const auto v = secular(eps, p);
  return {eps, v.F, v.dF};
}

double signed_sqrt(double eps) { return eps >= 0.0 ? std::sqrt(eps) : -std::sqrt(-eps); }

// Zero counts as positive so a root that lands exactly on a node is bracketed once.
bool positive(double x) { return x >= 0.0; }

std::vector<Node> scan(const CombParams& p, double eps_min, double eps_max, int n_scan) {
  const double a = lattice_spacing(p);
  const double s_lo = signed_sqrt(eps_min);
  const double s_hi = signed_sqrt(eps_max);
  const double step = kPi / (a * n_scan);
  const double cells = std::ceil((s_hi - s_lo) / step);
  if (cells + 1.0 > static_cast<double>(kMaxScanNodes)) {
    throw Error(ErrorKind::InvalidParameter, "energy window too large for the scan resolution");
  }
  const std::size_t n = std::max<std::size_t>(2, static_cast<std::size_t>(cells) + 1);
  std::vector<Node> nodes;
  nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double eps;
    if (i == 0) {
      eps = eps_min;
    } else if (i + 1 == n) {
      eps = eps_max;
    } else {
      const double s = s_lo + (s_hi - s_lo) * static_cast<double>(i) / static_cast<double>(n - 1);
      eps = s * std::abs(s);
    }
    nodes.push_back(evaluate(p, eps));
  }
  return nodes;
}

// Bisection on F - target between two nodes of opposite sign.
BandEdge refine_edge(const CombParams& p, Node lo, Node hi, double target, double tol) {
  double g_lo = lo.F - target;
  double g_hi = hi.F - target;
  double l = lo.eps, r = hi.eps;
  for (int it = 0; it < kMaxBisections; ++it) {
    if (r - l <= tol && std::min(std::abs(g_lo), std::abs(g_hi)) <= tol) break;
    const double m = 0.5 * (l + r);
    if (m <= l || m >= r) break;
    const double g_m = secular(m, p).F - target;
    if (positive(g_m) == positive(g_lo)) {
      l = m;
      g_lo = g_m;
    } else {
      r = m;
      g_hi = g_m;
    }
  }
  BandEdge edge;
  edge.epsilon = std::abs(g_lo) <= std::abs(g_hi) ? l : r;
  edge.edge_sign = target > 0.0 ? EdgeSign::Plus : EdgeSign::Minus;
  edge.bracket_lo = l;
  edge.bracket_hi = r;
  return edge;
}

// Bisection on dF between two nodes whose derivatives differ in sign.
Node refine_critical(const CombParams& p, Node lo, Node hi, double tol) {
  double l = lo.eps, r = hi.eps;
  const bool lo_positive = positive(lo.dF);
  for (int it = 0; it < kMaxBisections && r - l > tol; ++it) {
    const double m = 0.5 * (l + r);
    if (m <= l || m >= r) break;
    if (positive(secular(m, p).dF) == lo_positive) {
      l = m;
    } else {
      r = m;
    }
  }
  return evaluate(p, 0.5 * (l + r));
}

void collect_in_monotone_cell(const CombParams& p, const Node& lo, const Node& hi, double tol,
                              std::vector<BandEdge>& out) {
  for (const double target : {1.0, -1.0}) {
    if (positive(lo.F - target) != positive(hi.F - target)) {
      out.push_back(refine_edge(p, lo, hi, target, tol));
    }
  }
}

bool slopes_contradict_change(const Node& lo, const Node& hi) {
  const double change = hi.F - lo.F;
  const double scale = 1e-12 * (1.0 + std::abs(lo.F) + std::abs(hi.F));
  return std::abs(change) > scale && change * lo.dF < 0.0 && change * hi.dF < 0.0;
}

void check_monotone(const Node& lo, const Node& hi) {
  if (slopes_contradict_change(lo, hi)) {
    throw Error(ErrorKind::ScanTooCoarse,
                "several critical points of F inside one scan cell; increase the scan density");
  }
}

void append_touching_pair(const Node& crit, std::vector<BandEdge>& out) {
  BandEdge edge;
  edge.epsilon = crit.eps;
  edge.edge_sign = crit.F > 0.0 ? EdgeSign::Plus : EdgeSign::Minus;
  edge.bracket_lo = crit.eps;
  edge.bracket_hi = crit.eps;
  edge.touching = true;
  out.push_back(edge);
  out.push_back(edge);
}

void check_window(double eps_min, double eps_max, int n_scan, double tol_edge) {
  if (!std::isfinite(eps_min) || !std::isfinite(eps_max) || !(eps_min < eps_max)) {
    throw Error(ErrorKind::InvalidParameter, "energy window requires finite eps_min < eps_max");
  }
  if (n_scan < 10) throw Error(ErrorKind::InvalidParameter, "need at least 10 scan points per band");
  if (!(tol_edge > 0.0)) throw Error(ErrorKind::InvalidParameter, "edge tolerance must be > 0");
}

struct OpenBand {
  std::optional<BandEdge> lower;
  std::optional<BandEdge> upper;
};

std::vector<OpenBand> walk_bands(const CombParams& p, double eps_min, double eps_max, int n_scan,
                                 double tol_edge) {
  auto edges = find_band_edges(p, eps_min, eps_max, n_scan, tol_edge);
  // A root on the window boundary says nothing about the interior; the state of the first
  // segment is read from its midpoint instead.
  std::erase_if(edges, [&](const BandEdge& e) {
    return !e.touching && (e.epsilon - eps_min <= 2.0 * tol_edge || eps_max - e.epsilon <= 2.0 * tol_edge);
  });
  const double first = edges.empty() ? eps_max : edges.front().epsilon;
  std::vector<OpenBand> bands;
  bool inside = secular(0.5 * (eps_min + first), p).allowed();
  OpenBand current;
  for (const auto& edge : edges) {
    if (inside) {
      current.upper = edge;
      bands.push_back(current);
      current = {};
      inside = false;
    } else {
      current.lower = edge;
      inside = true;
    }
  }
  if (inside) bands.push_back(current);
  return bands;
}

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace

double default_eps_min(const CombParams& p) {
  validate(p);
  const double a = lattice_spacing(p);
  double depth = 0.0;
  if (const auto* one = std::get_if<OneSpeciesParams>(&p)) {
    depth = std::abs(one->w0) * (1.0 + std::abs(one->w1));
  } else {
    const auto& two = std::get<TwoSpeciesParams>(p);
    depth = std::abs(two.w0) * (1.0 + std::abs(two.w1)) + std::abs(two.v0) * (1.0 + std::abs(two.v1));
  }
  // cosh(κa) overflows past κa ≈ 710; bands that deep are narrower than double resolution.
  const double floor = -std::pow(700.0 / a, 2);
  double candidate = std::max(floor, -depth * depth - 1.0);
  if (is_opaque(p)) return candidate;

  // Extend downward while a coarse probe of the next decade still finds allowed energies.
  for (int round = 0; round < 8 && candidate > floor; ++round) {
    const double deeper = std::max(floor, 4.0 * candidate);
    const double k_lo = std::sqrt(-candidate);
    const double k_hi = std::sqrt(-deeper);
    bool found = false;
    for (int i = 0; i <= 256 && !found; ++i) {
      const double kappa = k_lo + (k_hi - k_lo) * i / 256.0;
      found = secular(-kappa * kappa, p).allowed();
    }
    if (!found) break;
    candidate = deeper;
  }
  return candidate;
}

std::vector<BandEdge> find_band_edges(const CombParams& p, double eps_min, double eps_max,
                                      int n_scan, double tol_edge) {
  require_band_mode(p);
  check_window(eps_min, eps_max, n_scan, tol_edge);
  const auto nodes = scan(p, eps_min, eps_max, n_scan);

  std::vector<BandEdge> edges;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Node& lo = nodes[i];
    const Node& hi = nodes[i + 1];
    if (lo.dF * hi.dF < 0.0) {
      const Node crit = refine_critical(p, lo, hi, 0.1 * tol_edge);
      check_monotone(lo, crit);
      check_monotone(crit, hi);
      const double excess = std::abs(crit.F) - 1.0;
      // A maximum near +1 or a minimum near -1 closes the gap between two bands.
      const bool outward = (crit.F > 0.0) == (lo.dF > 0.0);
      if (outward && std::abs(excess) <= kTouchTolerance) {
        append_touching_pair(crit, edges);
        // Only the opposite target can still be crossed in this cell.
        const double other = crit.F > 0.0 ? -1.0 : 1.0;
        for (const auto& [l, r] : {std::pair{lo, crit}, std::pair{crit, hi}}) {
          if (positive(l.F - other) != positive(r.F - other)) {
            edges.push_back(refine_edge(p, l, r, other, tol_edge));
          }
        }
      } else {
        collect_in_monotone_cell(p, lo, crit, tol_edge, edges);
        collect_in_monotone_cell(p, crit, hi, tol_edge, edges);
      }
    } else {
      check_monotone(lo, hi);
      collect_in_monotone_cell(p, lo, hi, tol_edge, edges);
    }
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const BandEdge& x, const BandEdge& y) { return x.epsilon < y.epsilon; });
  return edges;
}

std::vector<EnergyInterval> allowed_intervals(const CombParams& p, double eps_min, double eps_max,
                                              int n_scan, double tol_edge) {
  std::vector<EnergyInterval> out;
  for (const auto& band : walk_bands(p, eps_min, eps_max, n_scan, tol_edge)) {
    EnergyInterval iv{band.lower ? band.lower->epsilon : eps_min,
                      band.upper ? band.upper->epsilon : eps_max};
    // Touching pairs split one allowed range into two bands; merge them back here.
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

double forbidden_measure(const CombParams& p, double lo, double hi, int n_scan, double tol_edge) {
  double allowed = 0.0;
  for (const auto& iv : allowed_intervals(p, lo, hi, n_scan, tol_edge)) allowed += iv.width();
  return std::max(0.0, (hi - lo) - allowed);
}

std::vector<Band> enumerate_bands(const CombParams& p, double eps_min, double eps_max, int n_scan,
                                  double tol_edge, std::size_t n_samples) {
  if (n_samples < 2) throw Error(ErrorKind::InvalidParameter, "n_samples must be >= 2");
  const double a = lattice_spacing(p);
  std::vector<Band> bands;
  for (const auto& open : walk_bands(p, eps_min, eps_max, n_scan, tol_edge)) {
    if (!open.lower || !open.upper) continue;
    Band band;
    band.index = bands.size();
    band.lower = *open.lower;
    band.upper = *open.upper;

    const double lo = band.lower.epsilon;
    const double hi = band.upper.epsilon;
    band.samples.reserve(n_samples);
    for (std::size_t j = 0; j < n_samples; ++j) {
      DispersionSample s;
      if (j == 0) {
        s.epsilon = lo;
        s.q = band.lower.edge_sign == EdgeSign::Plus ? 0.0 : kPi / a;
      } else if (j + 1 == n_samples) {
        s.epsilon = hi;
        s.q = band.upper.edge_sign == EdgeSign::Plus ? 0.0 : kPi / a;
      } else {
        s.epsilon = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n_samples - 1);
        s.q = std::acos(std::clamp(secular(s.epsilon, p).F, -1.0, 1.0)) / a;
      }
      band.samples.push_back(s);
    }
    if (band.samples.front().q > band.samples.back().q) {
      std::reverse(band.samples.begin(), band.samples.end());
    }

    if (band.samples.size() >= 3) {
      const auto& s0 = band.samples[0];
      const auto& s1 = band.samples[1];
      const auto& s2 = band.samples[2];
      const double second_difference =
          ((s2.epsilon - s1.epsilon) / (s2.q - s1.q) - (s1.epsilon - s0.epsilon) / (s1.q - s0.q)) /
          (s2.q - s0.q);
      band.curvature_sign = second_difference > 0.0 ? 1 : (second_difference < 0.0 ? -1 : 0);
    }
    if (band.curvature_sign == 0) {
      // Flat second difference: fall back to which edge sits at q = 0.
      const bool q0_at_bottom = band.lower.edge_sign == EdgeSign::Plus;
      band.curvature_sign = q0_at_bottom ? 1 : -1;
    }
    bands.push_back(std::move(band));
  }
  return bands;
}

std::vector<EnergyInterval> band_gaps(const std::vector<Band>& bands) {
  std::vector<EnergyInterval> gaps;
  for (std::size_t i = 0; i + 1 < bands.size(); ++i) {
    gaps.push_back({bands[i].upper.epsilon, bands[i + 1].lower.epsilon});
  }
  return gaps;
}

std::vector<double> discrete_spectrum_critical(const OneSpeciesParams& p, std::size_t count,
                                               double tol_edge) {
  p.validate();
  if (!p.is_opaque()) throw Error(ErrorKind::NotCritical, "requires |w1| = 1");
  if (!(tol_edge > 0.0)) throw Error(ErrorKind::InvalidParameter, "tolerance must be > 0");

  std::vector<double> energies;
  energies.reserve(count);
  const double wa = p.w0 * p.a;
  const auto to_energy = [&](double x) { return (x / p.a) * (x / p.a); };

  if (wa == 0.0) {
    // -4/(w0·a) → ∞: the roots sit on the poles of tan.
    for (std::size_t n = 0; n < count; ++n) energies.push_back(to_energy((n + 0.5) * kPi));
    return energies;
  }

  // w0·a·sin(x)/x + 4cos(x) = 0 is the pole-free form of tan(x)/x = -4/(w0·a).
  const auto G = [wa](double x) { return wa * sinc(x) + 4.0 * std::cos(x); };
  const auto bisect = [&](double l, double r, bool l_positive) {
    for (int it = 0; it < kMaxBisections; ++it) {
      const double m = 0.5 * (l + r);
      if (m <= l || m >= r) break;
      const double dx = tol_edge * p.a * p.a / (2.0 * std::max(m, 1.0));
      if (r - l <= dx) break;
      if (positive(G(m)) == l_positive) {
        l = m;
      } else {
        r = m;
      }
    }
    return 0.5 * (l + r);
  };

  // Branch (0, π/2): tan(x)/x runs over (1, ∞), so a root needs -4 < w0·a < 0.
  if (count > 0 && wa > -4.0 && wa < 0.0) energies.push_back(to_energy(bisect(0.0, 0.5 * kPi, true)));

  // Branch ((n-½)π, (n+½)π): tan(x)/x increases monotonically from -∞ to ∞.
  // At its left end G = w0·a·sin((n-½)π)/x has the sign of -w0·a·(-1)^n.
  for (std::size_t n = 1; energies.size() < count; ++n) {
    const double left = (static_cast<double>(n) - 0.5) * kPi;
    const double right = (static_cast<double>(n) + 0.5) * kPi;
    const bool left_positive = (n % 2 == 0) ? (wa < 0.0) : (wa > 0.0);
    energies.push_back(to_energy(bisect(left, right, left_positive)));
  }
  return energies;
}

NegativeBandReport classify_negative_band(const OneSpeciesParams& p) {
  p.validate();
  if (p.w1 != 0.0) throw Error(ErrorKind::InvalidRegime, "classification requires w1 = 0");
  if (!(p.w0 < 0.0)) throw Error(ErrorKind::InvalidRegime, "classification requires w0 < 0");

  const CombParams comb = p;
  const double eps_min = default_eps_min(comb);
  const double eps_max = 4.0 * (kPi / p.a) * (kPi / p.a) + 1.0;
  const auto bands = enumerate_bands(comb, eps_min, eps_max, kDefaultScanPerBand,
                                     kDefaultEdgeTolerance, 3);
  if (bands.empty()) throw Error(ErrorKind::InvalidRegime, "no band found below the second zone");

  NegativeBandReport report;
  report.lower = bands.front().lower;
  report.upper = bands.front().upper;
  if (report.lower.epsilon < 0.0 && report.upper.epsilon >= 0.0) {
    report.regime = NegativeBandRegime::Straddling;
    return report;
  }

  // Critical points of F(iκ) for κ > 0 are sign changes of dF/dε on ε < 0.
  const double kappa_max = std::sqrt(-report.lower.epsilon);
  constexpr int kProbe = 1024;
  Node prev = evaluate(comb, -std::pow(kappa_max * 1e-6, 2));
  for (int i = 1; i <= kProbe; ++i) {
    const double kappa = kappa_max * static_cast<double>(i) / kProbe;
    const Node next = evaluate(comb, -kappa * kappa);
    if (prev.dF * next.dF < 0.0) {
      const Node crit = refine_critical(comb, next, prev, 1e-14);
      report.kappa0 = std::sqrt(-crit.eps);
      break;
    }
    prev = next;
  }
  report.regime = report.kappa0 ? NegativeBandRegime::DetachedWithInteriorMax
                                : NegativeBandRegime::Detached;
  return report;
}

}  // namespace hybridcomb
