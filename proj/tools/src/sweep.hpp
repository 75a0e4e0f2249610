#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "inputs.hpp"
#include "output.hpp"

namespace hybridcomb::cli {

inline constexpr std::size_t kMaxSweepCells = 10'000'000;

enum class SweepQuantity { BandMask, GapWidths, CurvatureSign };

/// One swept parameter: `steps` equally spaced values from min to max inclusive.
/// Names are w0, w1, v0, v1, d, a or eps.
struct Axis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  std::size_t steps = 2;

  double value(std::size_t i) const noexcept;
};

/// Parses "name:min:max:steps". Throws Error(InvalidParameter).
Axis parse_axis(const std::string& text);

struct SweepSpec {
  Axis axis1;
  std::optional<Axis> axis2;
  ParamInput fixed;
  SweepQuantity quantity = SweepQuantity::BandMask;
  std::optional<double> emin;  // gap_widths window; defaults per cell
  double emax = 100.0;

  /// Axis names, steps, window and grid size. Throws InvalidParameter or GridTooLarge.
  void validate() const;
  std::size_t cell_count() const noexcept;
};

/// Worker count: HYBRIDCOMB_THREADS if set to a positive integer, else available parallelism.
unsigned sweep_threads();

/// Evaluates every cell on `threads` workers; rows come out in grid order (axis1 outer).
Table run_sweep(const SweepSpec& spec, unsigned threads);

}  // namespace hybridcomb::cli
