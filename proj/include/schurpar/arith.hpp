#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schurpar/checked.hpp"

namespace schurpar {

struct PrimePower {
  i64 prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime/exponent decomposition of a positive integer. Primes strictly
// ascending; the empty list stands for 1.
struct Factorization {
  i64 n = 1;
  std::vector<PrimePower> factors;

  std::size_t distinct() const noexcept { return factors.size(); }
  bool squarefree() const noexcept;
  // Multiplies the factors back together (checked).
  i64 product() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Kronecker symbol (a/n) for all integers, with (a/0) = 1 iff a = +-1.
int kronecker(i64 a, i64 n) noexcept;

u64 mulmod(u64 a, u64 b, u64 m) noexcept;
u64 powmod(u64 base, u64 exp, u64 m) noexcept;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n) noexcept;

Factorization factorize(i64 n);
bool is_squarefree(i64 n);
std::vector<i64> divisors(const Factorization& f);

// Sum over d | n of kronecker(D, d).
i64 divisor_kronecker_sum(i64 n, i64 D);

// floor(sqrt(n)).
u64 isqrt(u64 n) noexcept;
bool is_square(u64 n) noexcept;
i64 gcd(i64 a, i64 b) noexcept;

// A square root of a modulo the odd prime p, if one exists.
std::optional<u64> sqrt_mod_prime(u64 a, u64 p);

// Modular inverse of a mod m (gcd(a, m) = 1 required).
u64 inverse_mod(u64 a, u64 m);

// Primes up to limit, ascending (plain Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// Smallest-prime-factor table for 0..limit.
class SpfSieve {
 public:
  explicit SpfSieve(std::uint32_t limit);

  std::uint32_t limit() const noexcept { return limit_; }
  std::uint32_t spf(std::uint32_t n) const noexcept { return spf_[n]; }
  Factorization factorize(std::uint32_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace schurpar
