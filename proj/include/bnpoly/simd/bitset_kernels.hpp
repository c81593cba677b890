#pragma once

// Word-parallel kernels over packed bitsets (uint64 words). The double
// description adjacency tests spend almost all their time here.
//
// Each kernel has a portable scalar reference and, on x86-64, an AVX2 variant
// compiled separately and selected at run time. The environment variable
// BNPOLY_SIMD=scalar forces the reference path.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace bnpoly::simd {

struct BitsetKernels {
  std::string_view name;
  /// popcount(a & b)
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  /// true iff a is a subset of b, i.e. (a & ~b) == 0
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  /// out = a & b
  void (*and_into)(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  /// popcount(a)
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
};

const BitsetKernels& scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in.
const BitsetKernels* avx2_kernels();

bool cpu_has_avx2();

/// The variant chosen for this process (AVX2 when compiled in and supported).
const BitsetKernels& active_kernels();

}  // namespace bnpoly::simd
