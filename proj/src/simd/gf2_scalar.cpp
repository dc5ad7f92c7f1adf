#include <bit>

#include "schurpar/simd/gf2_kernels.hpp"

namespace schurpar::simd {

void xor_shifted_scalar(std::span<std::uint64_t> words, std::uint64_t shift) {
  const std::size_t n = words.size();
  const std::uint64_t q = shift / 64;
  const unsigned r = static_cast<unsigned>(shift % 64);
  if (q >= n) return;
  // Descending so every read sees the pre-update word.
  for (std::size_t i = n; i-- > q;) {
    const std::size_t src = i - q;
    std::uint64_t v = words[src] << r;
    if (r != 0 && src > 0) v |= words[src - 1] >> (64 - r);
    words[i] ^= v;
  }
}

std::uint64_t popcount_masked_scalar(std::span<const std::uint64_t> words, std::uint64_t mask) {
  std::uint64_t total = 0;
  for (std::uint64_t w : words) total += static_cast<std::uint64_t>(std::popcount(w & mask));
  return total;
}

}  // namespace schurpar::simd
