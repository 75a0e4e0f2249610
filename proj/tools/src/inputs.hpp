#pragma once

#include <optional>
#include <string>

#include "hybridcomb/params.hpp"

namespace hybridcomb::cli {

/// Comb parameters as given on the command line. Any of v0, v1, d selects two species.
struct ParamInput {
  double w0 = 0.0;
  double w1 = 0.0;
  double a = 1.0;
  std::optional<double> v0;
  std::optional<double> v1;
  std::optional<double> d;

  bool two_species() const noexcept { return v0 || v1 || d; }

  /// d defaults to a/2 for two species.
  CombParams build() const {
    if (!two_species()) return OneSpeciesParams{w0, w1, a};
    return TwoSpeciesParams{w0, w1, v0.value_or(0.0), v1.value_or(0.0), d.value_or(0.5 * a), a};
  }

  /// Sets a parameter by flag name; returns false for unknown names.
  bool set(const std::string& name, double value) {
    if (name == "w0") w0 = value;
    else if (name == "w1") w1 = value;
    else if (name == "a") a = value;
    else if (name == "v0") v0 = value;
    else if (name == "v1") v1 = value;
    else if (name == "d") d = value;
    else return false;
    return true;
  }
};

}  // namespace hybridcomb::cli
