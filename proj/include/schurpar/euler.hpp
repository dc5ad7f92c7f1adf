#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schurpar/checked.hpp"

namespace schurpar {

// p(n) mod modulus for n = 0..N.
struct ResidueTable {
  std::uint32_t modulus = 2;
  std::vector<std::uint32_t> values;
};

ResidueTable partition_mod_table(i64 n_max, i64 modulus);

// Counts of p(n) mod m per residue over one indexing window.
struct ResidueCounts {
  std::string label;  // "n=0..N-1" or "n=1..N"
  i64 first = 0;
  i64 last = 0;
  std::vector<i64> counts;  // counts[r] = #{n : p(n) = r mod m}
};

// "The first N values" read both ways: n in [0, N-1] and n in [1, N].
struct EulerCensus {
  i64 limit = 0;
  std::uint32_t modulus = 2;
  ResidueCounts zero_based;
  ResidueCounts one_based;
};

EulerCensus euler_census(i64 limit, i64 modulus);

}  // namespace schurpar
