#include <cstdlib>
#include <string_view>

#include "schurpar/simd/gf2_kernels.hpp"

namespace schurpar::simd {

const Gf2Kernels& scalar_gf2_kernels() noexcept {
  static const Gf2Kernels k{"scalar", &xor_shifted_scalar, &popcount_masked_scalar};
  return k;
}

const Gf2Kernels* avx2_gf2_kernels() noexcept {
#if defined(SCHURPAR_HAVE_AVX2)
  static const Gf2Kernels k{"avx2", &xor_shifted_avx2, &popcount_masked_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &k : nullptr;
#else
  return nullptr;
#endif
}

const Gf2Kernels& active_gf2_kernels() noexcept {
  static const Gf2Kernels& chosen = []() -> const Gf2Kernels& {
    const char* env = std::getenv("SCHURPAR_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_gf2_kernels();
    if (const Gf2Kernels* k = avx2_gf2_kernels()) return *k;
    return scalar_gf2_kernels();
  }();
  return chosen;
}

}  // namespace schurpar::simd
