#include <cstdlib>
#include <string>

#include "pathattack/errors.hpp"
#include "pathattack/simd/kernels.hpp"

namespace pathattack::simd {
namespace {

const Kernels kScalar{Isa::kScalar, axpy_scalar, scale_scalar};
#if defined(__x86_64__) || defined(__i386__)
const Kernels kAvx2{Isa::kAvx2, axpy_avx2, scale_avx2};
#endif
#if defined(__aarch64__)
const Kernels kNeon{Isa::kNeon, axpy_neon, scale_neon};
#endif

const Kernels& select() {
  if (const char* env = std::getenv("PATHATTACK_SIMD"); env && std::string(env) == "scalar") {
    return kScalar;
  }
  if (isa_supported(Isa::kAvx2)) return kernels_for(Isa::kAvx2);
  if (isa_supported(Isa::kNeon)) return kernels_for(Isa::kNeon);
  return kScalar;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "?";
}

const Kernels& kernels_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw InvalidParameter("SIMD variant '" + std::string(isa_name(isa)) + "' not supported here");
  }
  switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::kAvx2: return kAvx2;
#endif
#if defined(__aarch64__)
    case Isa::kNeon: return kNeon;
#endif
    default: return kScalar;
  }
}

const Kernels& active() {
  static const Kernels& chosen = select();
  return chosen;
}

}  // namespace pathattack::simd
