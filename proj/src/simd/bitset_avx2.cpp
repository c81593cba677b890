// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "bnpoly/simd/bitset_kernels.hpp"

namespace bnpoly::simd {
namespace {

inline std::size_t popcount256(__m256i v) {
  return static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 0))) +
                                  std::popcount(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 1))) +
                                  std::popcount(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 2))) +
                                  std::popcount(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 3))));
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    count += popcount256(_mm256_and_si256(va, vb));
  }
  for (; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return count;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // andnot(vb, va) = ~b & a
    if (!_mm256_testz_si256(_mm256_andnot_si256(vb, va), _mm256_set1_epi64x(-1))) return false;
  }
  for (; i < words; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

void and_into(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_and_si256(va, vb));
  }
  for (; i < words; ++i) out[i] = a[i] & b[i];
}

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    count += popcount256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
  }
  for (; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i]));
  return count;
}

}  // namespace

const BitsetKernels* avx2_kernels() {
  static const BitsetKernels k{"avx2", &and_popcount, &is_subset, &and_into, &popcount};
  return &k;
}

}  // namespace bnpoly::simd
