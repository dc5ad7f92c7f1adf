#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Word-level GF(2) polynomial kernels. Bit i of the polynomial lives in
// words[i / 64] at bit position i % 64.
//
// Every kernel has a portable scalar reference and, where the target allows,
// an AVX2 variant with identical results. active_gf2_kernels() picks one at
// runtime from CPUID; SCHURPAR_SIMD=scalar in the environment forces the
// reference path.

namespace schurpar::simd {

// words ^= (words << shift), truncated to words.size() * 64 bits.
using XorShiftedFn = void (*)(std::span<std::uint64_t> words, std::uint64_t shift);
// sum of popcount(words[i] & mask)
using PopcountMaskedFn = std::uint64_t (*)(std::span<const std::uint64_t> words, std::uint64_t mask);

struct Gf2Kernels {
  std::string_view name;
  XorShiftedFn xor_shifted;
  PopcountMaskedFn popcount_masked;
};

void xor_shifted_scalar(std::span<std::uint64_t> words, std::uint64_t shift);
std::uint64_t popcount_masked_scalar(std::span<const std::uint64_t> words, std::uint64_t mask);

#if defined(SCHURPAR_HAVE_AVX2)
void xor_shifted_avx2(std::span<std::uint64_t> words, std::uint64_t shift);
std::uint64_t popcount_masked_avx2(std::span<const std::uint64_t> words, std::uint64_t mask);
#endif

const Gf2Kernels& scalar_gf2_kernels() noexcept;
// nullptr when the build or the CPU lacks AVX2.
const Gf2Kernels* avx2_gf2_kernels() noexcept;
const Gf2Kernels& active_gf2_kernels() noexcept;

}  // namespace schurpar::simd
