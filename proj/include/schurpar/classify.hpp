#pragma once

#include <array>
#include <string_view>

#include "schurpar/arith.hpp"

namespace schurpar {

// S1: p = 11 (24), represented by 5x^2+2xy+11y^2
// S2: p =  5 (24), same form
// S3: p =  1 (24), represented by 7x^2+6xy+9y^2
// S4: p =  7 (24), same form
enum class PrimeClass : std::uint8_t { none = 0, s1 = 1, s2 = 2, s3 = 3, s4 = 4 };

std::string_view to_string(PrimeClass c) noexcept;
inline bool in_s(PrimeClass c) noexcept { return c != PrimeClass::none; }

// Representability decided by exhaustive representation counting.
PrimeClass classify_prime(i64 p);

// Same answer, O(log p): reduce the discriminant -216 form (p, b, c) built
// from a square root of -216 mod 4p and read off which class represents p.
PrimeClass classify_prime_by_reduction(i64 p);

// Per-class factor counts of a square-free m.
struct FormPattern {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
  int n4 = 0;
  int t = 0;
  bool all_in_s = false;
};

FormPattern form_pattern(const Factorization& f);

// Form (i): n1 odd, n2 even, n4 even.  Form (ii): n1 even, n2 odd, n4 odd.
// n3 is unrestricted; every factor must lie in S.
bool matches_theorem_forms(const FormPattern& p) noexcept;

// For square-free m = 11 (24): whether R(m, 5x^2+2xy+11y^2) = 2 (mod 4),
// predicted from the classes of m's prime factors. Throws
// Errc::wrong_residue or Errc::not_squarefree on bad input.
bool theorem1_predict(i64 m);

// mu_i(m) = +1 iff m has an even number of S_i factors. m must be
// square-free with every factor in S (Errc::outside_s otherwise).
std::array<int, 4> mu_signs(i64 m);

// Whether A(2n+1) is odd, through (R(24n+11, 5x^2+2xy+11y^2) / 2) mod 2.
// Square-free moduli go through theorem1_predict, the rest through a
// direct representation count.
bool odd_indicator(i64 n);

}  // namespace schurpar
