#include "pathattack/simd/kernels.hpp"

namespace pathattack::simd {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double p = a * x[i];
    y[i] = y[i] + p;
  }
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] = x[i] * a;
}

}  // namespace pathattack::simd
