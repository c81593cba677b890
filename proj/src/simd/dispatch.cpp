#include <cstdlib>
#include <string_view>

#include "bnpoly/simd/bitset_kernels.hpp"

namespace bnpoly::simd {

#ifndef BNPOLY_HAVE_AVX2
const BitsetKernels* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const BitsetKernels& active_kernels() {
  static const BitsetKernels& chosen = [] () -> const BitsetKernels& {
    const char* env = std::getenv("BNPOLY_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    const BitsetKernels* fast = avx2_kernels();
    if (fast != nullptr && cpu_has_avx2()) return *fast;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace bnpoly::simd
