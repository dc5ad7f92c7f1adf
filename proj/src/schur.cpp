#include "schurpar/schur.hpp"

#include <array>
#include <string>

#include "schurpar/error.hpp"
#include "schurpar/simd/gf2_kernels.hpp"

namespace schurpar {

namespace {

void require_nonnegative(i64 n, const char* where) {
  if (n < 0) throw Error(Errc::invalid_argument, std::string(where) + ": n must be >= 0");
}

// Counts partitions whose parts descend with a gap rule. next_max(m) is the
// largest part allowed directly below a part m. With F(r, m) = #partitions
// of r into parts <= m obeying the rule,
//   F(r, m) = F(r, m-1) + F(r-m, next_max(m)),
// and the answer for n is F(n, n). Columns only look back a few steps, so
// a rolling window of them suffices.
template <typename NextMax>
std::vector<u64> gapped_table(i64 n_max, NextMax next_max) {
  constexpr std::size_t kWindow = 8;
  const std::size_t rows = static_cast<std::size_t>(n_max) + 1;
  std::array<std::vector<u64>, kWindow> cols;
  for (auto& c : cols) c.assign(rows, 0);
  // Column m <= 0: only the empty partition.
  std::vector<u64> empty(rows, 0);
  empty[0] = 1;
  auto column = [&](i64 m) -> const std::vector<u64>& {
    return m <= 0 ? empty : cols[static_cast<std::size_t>(m) % kWindow];
  };

  std::vector<u64> out(rows, 0);
  out[0] = 1;
  for (i64 m = 1; m <= n_max; ++m) {
    std::vector<u64>& cur = cols[static_cast<std::size_t>(m) % kWindow];
    const std::vector<u64>& prev = column(m - 1);
    const std::vector<u64>& below = column(next_max(m));
    for (std::size_t r = 0; r < rows; ++r) {
      u64 v = prev[r];
      if (static_cast<i64>(r) >= m) v = checked_add(v, below[r - static_cast<std::size_t>(m)]);
      cur[r] = v;
    }
    out[static_cast<std::size_t>(m)] = cur[static_cast<std::size_t>(m)];
  }
  return out;
}

}  // namespace

std::vector<u64> schur_a_table(i64 n_max) {
  require_nonnegative(n_max, "schur_a");
  // 0/1 knapsack over the admissible parts.
  std::vector<u64> dp(static_cast<std::size_t>(n_max) + 1, 0);
  dp[0] = 1;
  for (i64 k = 1; k <= n_max; ++k) {
    if (k % 3 == 0) continue;
    for (i64 s = n_max; s >= k; --s)
      dp[static_cast<std::size_t>(s)] = checked_add(dp[static_cast<std::size_t>(s)], dp[static_cast<std::size_t>(s - k)]);
  }
  return dp;
}

std::vector<u64> schur_a1_table(i64 n_max) {
  require_nonnegative(n_max, "schur_a1");
  // Below a multiple of 3 the part m - 3 is forbidden, so the cap drops to m - 4.
  return gapped_table(n_max, [](i64 m) { return m % 3 == 0 ? m - 4 : m - 3; });
}

std::vector<u64> schur_a2_table(i64 n_max) {
  require_nonnegative(n_max, "schur_a2");
  return gapped_table(n_max, [](i64 m) {
    switch (m % 3) {
      case 1: return m - 3;
      case 2: return m - 2;
      default: return m - 5;
    }
  });
}

u64 schur_a(i64 n) { return schur_a_table(n).back(); }
u64 schur_a1(i64 n) { return schur_a1_table(n).back(); }
u64 schur_a2(i64 n) { return schur_a2_table(n).back(); }

std::vector<SchurCount> schur_table(i64 n_max) {
  const auto a = schur_a_table(n_max);
  const auto a1 = schur_a1_table(n_max);
  const auto a2 = schur_a2_table(n_max);
  std::vector<SchurCount> rows;
  rows.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) rows.push_back({static_cast<i64>(i), a[i], a1[i], a2[i]});
  return rows;
}

BitVector parity_stream(i64 n_max, std::uint64_t bit_cap) {
  require_nonnegative(n_max, "parity_stream");
  const std::uint64_t bits = static_cast<std::uint64_t>(n_max) + 1;
  if (bits > bit_cap)
    throw Error(Errc::memory_cap, "parity_stream: " + std::to_string(bits) + " bits exceeds cap " + std::to_string(bit_cap));

  BitVector poly(bits);
  poly.set(0);
  const auto& kernels = simd::active_gf2_kernels();
  for (i64 k = 1; k <= n_max; ++k) {
    if (k % 3 == 0) continue;
    kernels.xor_shifted(poly.words(), static_cast<std::uint64_t>(k));
  }
  poly.clear_tail();
  return poly;
}

}  // namespace schurpar
