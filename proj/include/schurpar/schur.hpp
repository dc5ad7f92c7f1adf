#pragma once

#include <cstdint>
#include <vector>

#include "schurpar/bitvector.hpp"
#include "schurpar/checked.hpp"

namespace schurpar {

// A(n): distinct parts congruent to 1 or 2 mod 3.
// A1(n): parts differ by >= 3 and no two consecutive multiples of 3.
// A2(n): gap below part e is >= 3, 2, 5 for e = 1, 2, 0 mod 3.
struct SchurCount {
  i64 n = 0;
  u64 a = 0;
  u64 a1 = 0;
  u64 a2 = 0;
};

// Exact counts are 64-bit; anything that would overflow throws
// Errc::overflow. Larger n are parity-only territory.
u64 schur_a(i64 n);
u64 schur_a1(i64 n);
u64 schur_a2(i64 n);

// Tables for 0..n_max in one pass each.
std::vector<u64> schur_a_table(i64 n_max);
std::vector<u64> schur_a1_table(i64 n_max);
std::vector<u64> schur_a2_table(i64 n_max);
std::vector<SchurCount> schur_table(i64 n_max);

inline constexpr std::uint64_t kDefaultParityBitCap = std::uint64_t{1} << 34;

// Bit i = A(i) mod 2 for i in [0, n_max], via the GF(2) product of (1 + q^k).
BitVector parity_stream(i64 n_max, std::uint64_t bit_cap = kDefaultParityBitCap);

}  // namespace schurpar
