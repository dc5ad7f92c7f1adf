#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "schurpar/bitvector.hpp"
#include "schurpar/checked.hpp"
#include "schurpar/classify.hpp"
#include "schurpar/schur.hpp"

namespace schurpar {

// Cumulative #{0 <= n <= x : A(2n+1) odd} with
//   ratio_low  = odd_count (log x)^(11/12) / x
//   ratio_high = odd_count (log x)^(1/2)   / x
// Ratios are reported as 0 for x < 2.
struct ParityCensusRow {
  i64 x = 0;
  i64 odd_count = 0;
  double ratio_low = 0.0;
  double ratio_high = 0.0;

  friend bool operator==(const ParityCensusRow&, const ParityCensusRow&) = default;
};

enum class CensusMethod { sieve, direct };
std::string_view to_string(CensusMethod m) noexcept;

inline constexpr i64 kMaxCensusLimit = ((i64{1} << 35) - 11) / 24;

struct CensusOptions {
  unsigned threads = 0;  // 0: all cores
  i64 chunk = 1 << 16;   // n-values per sieve segment
  std::uint64_t parity_bit_cap = kDefaultParityBitCap;
};

// 1, 3, 10, 30, ... below x (starting at `first`), then x itself.
std::vector<i64> log_checkpoints(i64 x, i64 first = 1);

ParityCensusRow make_row(i64 x, i64 odd_count);

struct CensusResult {
  std::vector<ParityCensusRow> rows;
  // Sieve method only: #{n <= x : 24n+11 square-free and of form (i)/(ii)}
  // per checkpoint, the lower-bounding count.
  std::vector<i64> squarefree_form_counts;
};

CensusResult odd_census_detailed(i64 x, CensusMethod method, const CensusOptions& opts = {},
                                 const std::vector<i64>& checkpoints = {});
std::vector<ParityCensusRow> odd_census(i64 x, CensusMethod method, const CensusOptions& opts = {});

// Number of set bits at odd positions 1, 3, ..., <= last_bit.
std::uint64_t count_odd_positions(const BitVector& bits, std::uint64_t last_bit);

// m in C: square-free with every prime factor in S.
bool c_membership(i64 m);

// Which m in C are counted, and which mu_i splits them. required[i] is
// +1/-1 to demand mu_{i+1}(m) equal it, 0 for no constraint.
struct MuCondition {
  std::array<int, 4> required{0, 0, 0, 0};
  int split = 0;  // index of the splitting mu (0 -> mu_1)

  std::string describe() const;
};

struct HCounts {
  i64 x = 0;
  i64 h = 0;        // m in C, m <= x, meeting `required`
  i64 h_plus = 0;   // ... with mu_split(m) = +1
  i64 h_minus = 0;  // ... with mu_split(m) = -1
  MuCondition condition;
};

// Membership and mu-parities for every m <= limit, from a smallest prime
// factor sieve.
class CTable {
 public:
  explicit CTable(std::uint32_t limit);

  std::uint32_t limit() const noexcept { return limit_; }
  bool in_c(std::uint32_t m) const noexcept { return code_[m] & kInC; }
  // bit i set iff mu_{i+1}(m) = -1; meaningful only for m in C.
  std::uint8_t mu_odd_mask(std::uint32_t m) const noexcept { return code_[m] & 0x0f; }
  HCounts h_counts(i64 x, const MuCondition& cond) const;

 private:
  static constexpr std::uint8_t kInC = 0x80;
  std::uint32_t limit_;
  std::vector<std::uint8_t> code_;
};

HCounts h_counts(i64 x, const MuCondition& cond);

// h_plus(x) <= h_minus(x/p) + h_minus(p x) and the mirror inequality, where
// p is a prime in S whose class is the split index.
struct InequalityCheck {
  i64 x = 0;
  i64 prime = 0;
  MuCondition condition;
  i64 plus_lhs = 0, plus_rhs = 0;    // h_plus(x) vs h_minus(x/p) + h_minus(px)
  i64 minus_lhs = 0, minus_rhs = 0;  // h_minus(x) vs h_plus(x/p) + h_plus(px)
  bool holds() const noexcept { return plus_lhs <= plus_rhs && minus_lhs <= minus_rhs; }
};

InequalityCheck check_split_inequality(const CTable& table, i64 x, const MuCondition& cond, i64 prime);

struct PrimeFrequency {
  PrimeClass cls = PrimeClass::none;
  i64 count = 0;
  i64 primes = 0;
  double frequency = 0.0;
  double relative_deviation = 0.0;  // (frequency - 1/48) / (1/48)
  bool within_band = false;         // |relative_deviation| <= 15%
};

std::vector<PrimeFrequency> prime_class_frequencies(std::uint32_t prime_limit);

struct DensityReport {
  i64 x_max = 0;
  std::vector<ParityCensusRow> rows;
  std::uint32_t prime_limit = 0;
  std::vector<PrimeFrequency> frequencies;
};

DensityReport density_report(i64 x_max, const CensusOptions& opts = {}, std::uint32_t prime_limit = 1'000'000);

// Header x,odd_count,ratio_low,ratio_high; ratios to 6 significant digits.
void write_census_csv(std::ostream& out, const std::vector<ParityCensusRow>& rows);
void write_frequency_csv(std::ostream& out, const std::vector<PrimeFrequency>& freqs);
// Writes the census CSV to `path` and the frequency table next to it as
// <stem>.frequencies.csv.
void write_density_report(const DensityReport& report, const std::filesystem::path& path);

}  // namespace schurpar
