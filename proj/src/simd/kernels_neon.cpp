#include "pathattack/simd/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace pathattack::simd {

// vmulq then vaddq, never vfmaq: the fused form would round once and drift
// from the scalar reference.
void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t p0 = vmulq_f64(va, vld1q_f64(x + i));
    const float64x2_t p1 = vmulq_f64(va, vld1q_f64(x + i + 2));
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), p0));
    vst1q_f64(y + i + 2, vaddq_f64(vld1q_f64(y + i + 2), p1));
  }
  for (; i < n; ++i) {
    const double p = a * x[i];
    y[i] = y[i] + p;
  }
}

void scale_neon(double a, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(vld1q_f64(x + i), va));
  for (; i < n; ++i) x[i] = x[i] * a;
}

}  // namespace pathattack::simd

#endif
