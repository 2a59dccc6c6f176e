#pragma once

#include <cstddef>
#include <string_view>

namespace pathattack::simd {

// Dense row kernels used by the simplex tableau. Every variant computes the
// product and the sum as separate roundings, so all variants agree bit for
// bit with the scalar reference.

// y[i] += a * x[i]
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
// x[i] *= a
void scale_scalar(double a, double* x, std::size_t n);

#if defined(__x86_64__) || defined(__i386__)
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void scale_avx2(double a, double* x, std::size_t n);
#endif

#if defined(__aarch64__)
void axpy_neon(double a, const double* x, double* y, std::size_t n);
void scale_neon(double a, double* x, std::size_t n);
#endif

enum class Isa { kScalar, kAvx2, kNeon };

struct Kernels {
  Isa isa;
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double, double*, std::size_t);
};

bool isa_supported(Isa isa);
std::string_view isa_name(Isa isa);

// Kernel table for a specific ISA; throws InvalidParameter when the ISA is not
// supported on this machine.
const Kernels& kernels_for(Isa isa);

// Best supported ISA, chosen once. PATHATTACK_SIMD=scalar forces the
// reference path.
const Kernels& active();

}  // namespace pathattack::simd
