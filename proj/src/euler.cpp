#include "schurpar/euler.hpp"

#include "schurpar/error.hpp"

namespace schurpar {

ResidueTable partition_mod_table(i64 n_max, i64 modulus) {
  if (n_max < 0) throw Error(Errc::invalid_argument, "partition_mod_table: N must be >= 0");
  if (modulus < 2 || modulus > UINT32_MAX) throw Error(Errc::invalid_argument, "partition_mod_table: modulus must be in [2, 2^32)");
  const u64 m = static_cast<u64>(modulus);
  ResidueTable t;
  t.modulus = static_cast<std::uint32_t>(modulus);
  t.values.assign(static_cast<std::size_t>(n_max) + 1, 0);
  t.values[0] = static_cast<std::uint32_t>(1 % m);

  // p(n) = sum_{k>=1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
  for (i64 n = 1; n <= n_max; ++n) {
    u64 acc = 0;
    for (i64 k = 1;; ++k) {
      const i64 g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const i64 g2 = k * (3 * k + 1) / 2;
      u64 term = t.values[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) term += t.values[static_cast<std::size_t>(n - g2)];
      term %= m;
      acc = (k % 2 == 1) ? (acc + term) % m : (acc + m - term) % m;
    }
    t.values[static_cast<std::size_t>(n)] = static_cast<std::uint32_t>(acc);
  }
  return t;
}

EulerCensus euler_census(i64 limit, i64 modulus) {
  if (limit < 1) throw Error(Errc::invalid_argument, "euler_census: limit must be >= 1");
  const ResidueTable t = partition_mod_table(limit, modulus);
  auto window = [&](i64 first, i64 last, std::string label) {
    ResidueCounts c{std::move(label), first, last, std::vector<i64>(t.modulus, 0)};
    for (i64 n = first; n <= last; ++n) ++c.counts[t.values[static_cast<std::size_t>(n)]];
    return c;
  };
  EulerCensus out;
  out.limit = limit;
  out.modulus = t.modulus;
  out.zero_based = window(0, limit - 1, "n=0.." + std::to_string(limit - 1));
  out.one_based = window(1, limit, "n=1.." + std::to_string(limit));
  return out;
}

}  // namespace schurpar
