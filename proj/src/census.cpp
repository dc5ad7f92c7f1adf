#include "schurpar/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "schurpar/arith.hpp"
#include "schurpar/parallel.hpp"
#include "schurpar/qform.hpp"
#include "schurpar/simd/gf2_kernels.hpp"

namespace schurpar {

std::string_view to_string(CensusMethod m) noexcept { return m == CensusMethod::sieve ? "sieve" : "direct"; }

std::vector<i64> log_checkpoints(i64 x, i64 first) {
  std::vector<i64> out;
  for (i64 decade = first; decade < x; decade *= 10) {
    out.push_back(decade);
    if (3 * decade < x) out.push_back(3 * decade);
  }
  out.push_back(x);
  return out;
}

ParityCensusRow make_row(i64 x, i64 odd_count) {
  ParityCensusRow row{x, odd_count, 0.0, 0.0};
  if (x >= 2) {
    const double lx = std::log(static_cast<double>(x));
    const double base = static_cast<double>(odd_count) / static_cast<double>(x);
    row.ratio_low = base * std::pow(lx, 11.0 / 12.0);
    row.ratio_high = base * std::sqrt(lx);
  }
  return row;
}

std::uint64_t count_odd_positions(const BitVector& bits, std::uint64_t last_bit) {
  constexpr std::uint64_t kOddMask = 0xAAAAAAAAAAAAAAAAull;
  const auto words = bits.words();
  const std::uint64_t full = (last_bit + 1) / 64;
  std::uint64_t total = simd::active_gf2_kernels().popcount_masked(words.first(full), kOddMask);
  const unsigned rem = static_cast<unsigned>((last_bit + 1) % 64);
  if (rem != 0) total += std::popcount(words[full] & kOddMask & ((std::uint64_t{1} << rem) - 1));
  return total;
}

namespace {

struct SmallPrime {
  std::uint32_t p;
  std::uint32_t first_residue;  // n with 24n + 11 = 0 (mod p)
  PrimeClass cls;
};

std::uint8_t class_bit(PrimeClass c) { return static_cast<std::uint8_t>(1u << (static_cast<unsigned>(c) - 1)); }

FormPattern pattern_from_mask(std::uint8_t mask, bool all_in_s) {
  FormPattern p;
  p.n1 = mask & 1;
  p.n2 = (mask >> 1) & 1;
  p.n3 = (mask >> 2) & 1;
  p.n4 = (mask >> 3) & 1;
  p.all_in_s = all_in_s;
  return p;
}

struct ChunkTally {
  std::vector<i64> odd;    // per checkpoint
  std::vector<i64> forms;  // per checkpoint
};

// Factors every m = 24n + 11 for n in [lo, hi) by walking, for each small
// prime p, the arithmetic progression of n with p | m.
ChunkTally sieve_chunk(i64 lo, i64 hi, const std::vector<SmallPrime>& primes, const std::vector<i64>& cps) {
  const std::size_t len = static_cast<std::size_t>(hi - lo);
  std::vector<u64> cof(len);
  std::vector<std::uint8_t> mask(len, 0);
  std::vector<std::uint8_t> flags(len, 0);  // 1: factor outside S, 2: not square-free
  for (std::size_t i = 0; i < len; ++i) cof[i] = 24 * static_cast<u64>(lo + static_cast<i64>(i)) + 11;

  for (const SmallPrime& sp : primes) {
    const u64 p = sp.p;
    const u64 start_off = (sp.first_residue + p - static_cast<u64>(lo) % p) % p;
    for (u64 i = start_off; i < len; i += p) {
      cof[i] /= p;
      if (cof[i] % p == 0) {
        flags[i] |= 2;
        do cof[i] /= p;
        while (cof[i] % p == 0);
      }
      if (in_s(sp.cls)) {
        mask[i] ^= class_bit(sp.cls);
      } else {
        flags[i] |= 1;
      }
    }
  }

  ChunkTally tally{std::vector<i64>(cps.size(), 0), std::vector<i64>(cps.size(), 0)};
  auto first_cp = std::lower_bound(cps.begin(), cps.end(), lo);
  for (std::size_t i = 0; i < len; ++i) {
    const i64 n = lo + static_cast<i64>(i);
    const u64 m = 24 * static_cast<u64>(n) + 11;
    bool odd = false;
    bool form = false;
    if (flags[i] & 2) {
      odd = (rep_count(static_cast<i64>(m), kForm5211) / 2) % 2 == 1;
    } else {
      bool all_in_s = !(flags[i] & 1);
      if (all_in_s && cof[i] > 1) {
        const PrimeClass c = classify_prime_by_reduction(static_cast<i64>(cof[i]));
        if (in_s(c)) {
          mask[i] ^= class_bit(c);
        } else {
          all_in_s = false;
        }
      }
      odd = form = matches_theorem_forms(pattern_from_mask(mask[i], all_in_s));
    }
    if (!odd) continue;
    while (first_cp != cps.end() && *first_cp < n) ++first_cp;
    for (auto it = first_cp; it != cps.end(); ++it) {
      const std::size_t k = static_cast<std::size_t>(it - cps.begin());
      ++tally.odd[k];
      if (form) ++tally.forms[k];
    }
  }
  return tally;
}

}  // namespace

CensusResult odd_census_detailed(i64 x, CensusMethod method, const CensusOptions& opts,
                                 const std::vector<i64>& checkpoints) {
  if (x < 0) throw Error(Errc::invalid_argument, "odd_census: x must be >= 0");
  if (x > kMaxCensusLimit)
    throw Error(Errc::memory_cap, "odd_census: x = " + std::to_string(x) + " exceeds " + std::to_string(kMaxCensusLimit));
  std::vector<i64> cps = checkpoints.empty() ? log_checkpoints(x) : checkpoints;
  std::sort(cps.begin(), cps.end());
  if (cps.back() > x) throw Error(Errc::invalid_argument, "odd_census: checkpoint beyond x");

  CensusResult result;
  if (method == CensusMethod::direct) {
    const BitVector bits = parity_stream(checked_add(checked_mul(2, x), 1), opts.parity_bit_cap);
    for (i64 cp : cps) result.rows.push_back(make_row(cp, static_cast<i64>(count_odd_positions(bits, 2 * static_cast<u64>(cp) + 1))));
    return result;
  }

  const u64 m_max = 24 * static_cast<u64>(x) + 11;
  std::vector<SmallPrime> primes;
  for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(isqrt(m_max)))) {
    if (p < 5) continue;
    const u64 inv24 = inverse_mod(24 % p, p);
    const u64 r = mulmod((p - 11 % p) % p, inv24, p);
    primes.push_back({p, static_cast<std::uint32_t>(r), classify_prime_by_reduction(p)});
  }

  const auto tallies = map_chunks(0, x + 1, opts.chunk, opts.threads,
                                  [&](i64 lo, i64 hi) { return sieve_chunk(lo, hi, primes, cps); });
  std::vector<i64> odd(cps.size(), 0), forms(cps.size(), 0);
  for (const ChunkTally& t : tallies) {
    for (std::size_t k = 0; k < cps.size(); ++k) {
      odd[k] += t.odd[k];
      forms[k] += t.forms[k];
    }
  }
  for (std::size_t k = 0; k < cps.size(); ++k) result.rows.push_back(make_row(cps[k], odd[k]));
  result.squarefree_form_counts = std::move(forms);
  return result;
}

std::vector<ParityCensusRow> odd_census(i64 x, CensusMethod method, const CensusOptions& opts) {
  return odd_census_detailed(x, method, opts).rows;
}

bool c_membership(i64 m) {
  if (m < 1) throw Error(Errc::invalid_argument, "c_membership: m must be >= 1");
  const Factorization f = factorize(m);
  if (!f.squarefree()) return false;
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return in_s(classify_prime(pp.prime)); });
}

std::string MuCondition::describe() const {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (required[static_cast<std::size_t>(i)] == 0) continue;
    s += "mu" + std::to_string(i + 1) + (required[static_cast<std::size_t>(i)] > 0 ? "=+1," : "=-1,");
  }
  s += "split=mu" + std::to_string(split + 1);
  return s;
}

CTable::CTable(std::uint32_t limit) : limit_(limit), code_(static_cast<std::size_t>(limit) + 1, 0) {
  if (limit >= 1) code_[1] = kInC;
  const SpfSieve sieve(limit);
  for (std::uint32_t m = 2; m <= limit; ++m) {
    const std::uint32_t p = sieve.spf(m);
    const std::uint32_t k = m / p;
    if (k == 1) {
      const PrimeClass c = classify_prime_by_reduction(p);
      code_[m] = in_s(c) ? static_cast<std::uint8_t>(kInC | class_bit(c)) : 0;
      continue;
    }
    if (k % p == 0 || !(code_[k] & kInC) || !(code_[p] & kInC)) continue;
    code_[m] = static_cast<std::uint8_t>(kInC | ((code_[k] ^ code_[p]) & 0x0f));
  }
}

HCounts CTable::h_counts(i64 x, const MuCondition& cond) const {
  if (x < 0) throw Error(Errc::invalid_argument, "h_counts: x must be >= 0");
  if (x > limit_) throw Error(Errc::invalid_argument, "h_counts: x beyond table limit");
  HCounts out;
  out.x = x;
  out.condition = cond;
  for (std::uint32_t m = 1; m <= static_cast<std::uint32_t>(x); ++m) {
    if (!in_c(m)) continue;
    const std::uint8_t odd = mu_odd_mask(m);
    bool ok = true;
    for (std::size_t i = 0; i < 4 && ok; ++i) {
      if (cond.required[i] == 0) continue;
      const int mu = (odd >> i) & 1 ? -1 : 1;
      ok = mu == cond.required[i];
    }
    if (!ok) continue;
    ++out.h;
    if ((odd >> cond.split) & 1) {
      ++out.h_minus;
    } else {
      ++out.h_plus;
    }
  }
  return out;
}

HCounts h_counts(i64 x, const MuCondition& cond) {
  if (x < 1) throw Error(Errc::invalid_argument, "h_counts: x must be >= 1");
  if (x > UINT32_MAX) throw Error(Errc::memory_cap, "h_counts: x too large");
  return CTable(static_cast<std::uint32_t>(x)).h_counts(x, cond);
}

InequalityCheck check_split_inequality(const CTable& table, i64 x, const MuCondition& cond, i64 prime) {
  InequalityCheck chk;
  chk.x = x;
  chk.prime = prime;
  chk.condition = cond;
  const HCounts at = table.h_counts(x, cond);
  const HCounts below = table.h_counts(x / prime, cond);
  const HCounts above = table.h_counts(checked_mul(x, prime), cond);
  chk.plus_lhs = at.h_plus;
  chk.plus_rhs = below.h_minus + above.h_minus;
  chk.minus_lhs = at.h_minus;
  chk.minus_rhs = below.h_plus + above.h_plus;
  return chk;
}

std::vector<PrimeFrequency> prime_class_frequencies(std::uint32_t prime_limit) {
  const auto primes = primes_up_to(prime_limit);
  std::array<i64, 5> counts{};
  for (std::uint32_t p : primes) ++counts[static_cast<std::size_t>(classify_prime(p))];
  std::vector<PrimeFrequency> out;
  constexpr double kExpected = 1.0 / 48.0;
  for (PrimeClass c : {PrimeClass::s1, PrimeClass::s2, PrimeClass::s3, PrimeClass::s4}) {
    PrimeFrequency f;
    f.cls = c;
    f.count = counts[static_cast<std::size_t>(c)];
    f.primes = static_cast<i64>(primes.size());
    f.frequency = primes.empty() ? 0.0 : static_cast<double>(f.count) / static_cast<double>(f.primes);
    f.relative_deviation = (f.frequency - kExpected) / kExpected;
    f.within_band = std::abs(f.relative_deviation) <= 0.15;
    out.push_back(f);
  }
  return out;
}

DensityReport density_report(i64 x_max, const CensusOptions& opts, std::uint32_t prime_limit) {
  if (x_max < 10) throw Error(Errc::invalid_argument, "density_report: x_max must be >= 10");
  DensityReport r;
  r.x_max = x_max;
  r.rows = odd_census_detailed(x_max, CensusMethod::sieve, opts, log_checkpoints(x_max, 10)).rows;
  r.prime_limit = prime_limit;
  r.frequencies = prime_class_frequencies(prime_limit);
  return r;
}

namespace {

std::string sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

void write_census_csv(std::ostream& out, const std::vector<ParityCensusRow>& rows) {
  out << "x,odd_count,ratio_low,ratio_high\n";
  for (const auto& r : rows) out << r.x << ',' << r.odd_count << ',' << sig6(r.ratio_low) << ',' << sig6(r.ratio_high) << '\n';
}

void write_frequency_csv(std::ostream& out, const std::vector<PrimeFrequency>& freqs) {
  out << "class,count,primes,frequency,expected,relative_deviation,status\n";
  for (const auto& f : freqs) {
    out << to_string(f.cls) << ',' << f.count << ',' << f.primes << ',' << sig6(f.frequency) << ',' << sig6(1.0 / 48.0)
        << ',' << sig6(f.relative_deviation) << ',' << (f.within_band ? "pass" : "warn") << '\n';
  }
}

void write_density_report(const DensityReport& report, const std::filesystem::path& path) {
  std::ofstream csv(path, std::ios::binary);
  if (!csv) throw Error(Errc::io, "cannot write " + path.string());
  write_census_csv(csv, report.rows);
  std::filesystem::path freq = path;
  freq.replace_filename(path.stem().string() + ".frequencies.csv");
  std::ofstream fcsv(freq, std::ios::binary);
  if (!fcsv) throw Error(Errc::io, "cannot write " + freq.string());
  write_frequency_csv(fcsv, report.frequencies);
  if (!csv.flush() || !fcsv.flush()) throw Error(Errc::io, "write failed for " + path.string());
}

}  // namespace schurpar
