#include "schurpar/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace schurpar {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::overflow: return "overflow";
    case Errc::not_prime: return "not_prime";
    case Errc::not_squarefree: return "not_squarefree";
    case Errc::wrong_residue: return "wrong_residue";
    case Errc::outside_s: return "outside_s";
    case Errc::memory_cap: return "memory_cap";
    case Errc::io: return "io";
    case Errc::unknown_suite: return "unknown_suite";
  }
  return "unknown";
}

namespace {

constexpr i64 kTrialLimit = 1'000'000;

// Jacobi symbol for odd positive n and 0 <= a < n.
int jacobi(u64 a, u64 n) noexcept {
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const u64 r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

u64 rho_split(u64 n) {
  if (n % 2 == 0) return 2;
  // Brent's variant; the constant is bumped until a proper factor falls out.
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = rho_split(n);
  split_into(d, out);
  split_into(n / d, out);
}

void push_factor(std::vector<PrimePower>& factors, i64 p, int e) {
  if (!factors.empty() && factors.back().prime == p) {
    factors.back().exponent += e;
  } else {
    factors.push_back({p, e});
  }
}

}  // namespace

bool Factorization::squarefree() const noexcept {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

i64 Factorization::product() const {
  i64 r = 1;
  for (const auto& [p, e] : factors)
    for (int i = 0; i < e; ++i) r = checked_mul(r, p);
  return r;
}

int kronecker(i64 a, i64 n) noexcept {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;

  int result = 1;
  u64 un = n < 0 ? u64{0} - static_cast<u64>(n) : static_cast<u64>(n);
  const int twos = std::countr_zero(un);
  un >>= twos;
  if (twos & 1) {
    const i64 r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  if (n < 0 && a < 0) result = -result;
  if (un == 1) return result;

  // un is odd and < 2^63 here, so the signed reduction is safe.
  const i64 m = static_cast<i64>(un);
  const u64 ua = static_cast<u64>(((a % m) + m) % m);
  return result * jacobi(ua, un);
}

u64 mulmod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) noexcept {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  for (u64 a : kBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(i64 n) {
  if (n <= 0) throw Error(Errc::invalid_argument, "factorize: n must be >= 1, got " + std::to_string(n));
  Factorization f;
  f.n = n;
  i64 rest = n;
  auto strip = [&](i64 p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) f.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (i64 p = 5; p <= kTrialLimit && p * p <= rest; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (rest == 1) return f;
  if (rest <= kTrialLimit * kTrialLimit || is_prime(static_cast<u64>(rest))) {
    f.factors.push_back({rest, 1});
    return f;
  }
  std::vector<u64> big;
  split_into(static_cast<u64>(rest), big);
  std::sort(big.begin(), big.end());
  for (u64 p : big) push_factor(f.factors, static_cast<i64>(p), 1);
  return f;
}

bool is_squarefree(i64 n) { return factorize(n).squarefree(); }

std::vector<i64> divisors(const Factorization& f) {
  std::vector<i64> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    i64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 divisor_kronecker_sum(i64 n, i64 D) {
  // Multiplicative: product over p^e || n of sum_{j<=e} (D/p)^j.
  const Factorization f = factorize(n);
  i64 total = 1;
  for (const auto& [p, e] : f.factors) {
    const int chi = kronecker(D, p);
    i64 local = 1, power = 1;
    for (int j = 1; j <= e; ++j) {
      power *= chi;
      local += power;
    }
    total *= local;
  }
  return total;
}

u64 isqrt(u64 n) noexcept {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (r > 0xFFFFFFFFull || r * r > n)) --r;
  while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(u64 n) noexcept {
  const u64 r = isqrt(n);
  return r * r == n;
}

i64 gcd(i64 a, i64 b) noexcept { return std::gcd(a, b); }

std::optional<u64> sqrt_mod_prime(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);

  // Tonelli-Shanks.
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 c = powmod(z, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  u64 t = powmod(a, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    r = mulmod(r, b, p);
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    m = i;
  }
  return r;
}

u64 inverse_mod(u64 a, u64 m) {
  i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw Error(Errc::invalid_argument, "inverse_mod: not invertible");
  const i64 mm = static_cast<i64>(m);
  return static_cast<u64>(((old_s % mm) + mm) % mm);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

SpfSieve::SpfSieve(std::uint32_t limit) : limit_(limit), spf_(static_cast<std::size_t>(limit) + 1, 0) {
  if (limit >= 1) spf_[1] = 1;
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (u64 j = i * i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  }
}

Factorization SpfSieve::factorize(std::uint32_t n) const {
  if (n == 0 || n > limit_) throw Error(Errc::invalid_argument, "SpfSieve::factorize: out of range");
  Factorization f;
  f.n = n;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    n /= p;
    push_factor(f.factors, p, 1);
  }
  return f;
}

}  // namespace schurpar
