#include <bit>

#include "bnpoly/simd/bitset_kernels.hpp"

namespace bnpoly::simd {
namespace {

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return count;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

void and_into(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = a[i] & b[i];
}

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i]));
  return count;
}

}  // namespace

const BitsetKernels& scalar_kernels() {
  static const BitsetKernels k{"scalar", &and_popcount, &is_subset, &and_into, &popcount};
  return k;
}

}  // namespace bnpoly::simd
