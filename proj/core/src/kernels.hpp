#pragma once

namespace hybridcomb::detail {

/// cos(kL) and sin(kL)/k as functions of ε = k², with their ε-derivatives.
/// Both are entire in ε; negative ε continues through k = i√|ε|.
struct FreeKernel {
  double c = 1.0;     // cos(kL)
  double s = 0.0;     // sin(kL)/k
  double dc = 0.0;    // d c / dε
  double ds = 0.0;    // d s / dε
  double imag = 0.0;  // largest imaginary part dropped from the complex evaluation
};

FreeKernel free_kernel(double epsilon, double length);

}  // namespace hybridcomb::detail
