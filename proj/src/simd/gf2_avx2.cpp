#include <immintrin.h>

#include <bit>

#include "schurpar/simd/gf2_kernels.hpp"

namespace schurpar::simd {

void xor_shifted_avx2(std::span<std::uint64_t> words, std::uint64_t shift) {
  const std::size_t n = words.size();
  const std::size_t q = static_cast<std::size_t>(shift / 64);
  const unsigned r = static_cast<unsigned>(shift % 64);
  if (q >= n) return;

  std::uint64_t* w = words.data();
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(r));
  // srl by 64 yields zero, which covers r == 0.
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(64 - r));

  // Blocks of four words, top down. Each block loads everything it reads
  // before its store, and only touches words at or below the block.
  std::size_t i = n;
  while (i >= q + 5) {
    const std::size_t lo = i - 4;
    const __m256i hi_src = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + lo - q));
    const __m256i lo_src = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + lo - q - 1));
    const __m256i dst = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + lo));
    const __m256i shifted = _mm256_or_si256(_mm256_sll_epi64(hi_src, left), _mm256_srl_epi64(lo_src, right));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(w + lo), _mm256_xor_si256(dst, shifted));
    i = lo;
  }
  for (; i-- > q;) {
    const std::size_t src = i - q;
    std::uint64_t v = w[src] << r;
    if (r != 0 && src > 0) v |= w[src - 1] >> (64 - r);
    w[i] ^= v;
  }
}

namespace {

// Nibble-table popcount (Mula et al.), summed with SAD into 64-bit lanes.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
}

}  // namespace

std::uint64_t popcount_masked_avx2(std::span<const std::uint64_t> words, std::uint64_t mask) {
  const std::size_t n = words.size();
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + i)), m);
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(words[i] & mask));
  return total;
}

}  // namespace schurpar::simd
