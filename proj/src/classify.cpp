#include "schurpar/classify.hpp"

#include <string>

#include "schurpar/qform.hpp"

namespace schurpar {

namespace {

bool represented_by_5_2_11(i64 p) { return rep_count(p, kForm5211) > 0; }
bool represented_by_7_6_9(i64 p) { return rep_count(p, kForm769) > 0; }

}  // namespace

std::string_view to_string(PrimeClass c) noexcept {
  switch (c) {
    case PrimeClass::none: return "None";
    case PrimeClass::s1: return "S1";
    case PrimeClass::s2: return "S2";
    case PrimeClass::s3: return "S3";
    case PrimeClass::s4: return "S4";
  }
  return "?";
}

PrimeClass classify_prime(i64 p) {
  if (p < 2 || !is_prime(static_cast<u64>(p)))
    throw Error(Errc::not_prime, "classify_prime: " + std::to_string(p) + " is not prime");
  switch (p % 24) {
    case 11: return represented_by_5_2_11(p) ? PrimeClass::s1 : PrimeClass::none;
    case 5: return represented_by_5_2_11(p) ? PrimeClass::s2 : PrimeClass::none;
    case 1: return represented_by_7_6_9(p) ? PrimeClass::s3 : PrimeClass::none;
    case 7: return represented_by_7_6_9(p) ? PrimeClass::s4 : PrimeClass::none;
    default: return PrimeClass::none;
  }
}

PrimeClass classify_prime_by_reduction(i64 p) {
  if (p < 2 || !is_prime(static_cast<u64>(p)))
    throw Error(Errc::not_prime, "classify_prime_by_reduction: " + std::to_string(p) + " is not prime");
  const i64 r = p % 24;
  if (r != 1 && r != 5 && r != 7 && r != 11) return PrimeClass::none;
  if (kronecker(-6, p) != 1) return PrimeClass::none;

  // b = 2s with s^2 = -54 (mod p) gives b^2 = -216 (mod 4p).
  const u64 up = static_cast<u64>(p);
  const auto s = sqrt_mod_prime((up - 54 % up) % up, up);
  if (!s) return PrimeClass::none;
  // s <= p/2 keeps b <= p, so (p, b, c) starts with |b| <= a.
  const i64 b = 2 * static_cast<i64>(std::min(*s, up - *s));
  const __int128 num = __int128(b) * b + 216;
  const i64 c = static_cast<i64>(num / (4 * __int128(p)));
  const QuadForm red = reduce({p, b, c});
  const bool five = red.a == 5 && (red.b == 2 || red.b == -2) && red.c == 11;
  const bool seven = red.a == 7 && (red.b == 6 || red.b == -6) && red.c == 9;
  switch (r) {
    case 11: return five ? PrimeClass::s1 : PrimeClass::none;
    case 5: return five ? PrimeClass::s2 : PrimeClass::none;
    case 1: return seven ? PrimeClass::s3 : PrimeClass::none;
    default: return seven ? PrimeClass::s4 : PrimeClass::none;
  }
}

FormPattern form_pattern(const Factorization& f) {
  FormPattern pat;
  pat.t = static_cast<int>(f.distinct());
  int in = 0;
  for (const auto& [p, e] : f.factors) {
    switch (classify_prime(p)) {
      case PrimeClass::s1: ++pat.n1; ++in; break;
      case PrimeClass::s2: ++pat.n2; ++in; break;
      case PrimeClass::s3: ++pat.n3; ++in; break;
      case PrimeClass::s4: ++pat.n4; ++in; break;
      case PrimeClass::none: break;
    }
  }
  pat.all_in_s = in == pat.t;
  return pat;
}

bool matches_theorem_forms(const FormPattern& p) noexcept {
  if (!p.all_in_s) return false;
  const bool odd1 = p.n1 % 2 == 1, odd2 = p.n2 % 2 == 1, odd4 = p.n4 % 2 == 1;
  return (odd1 && !odd2 && !odd4) || (!odd1 && odd2 && odd4);
}

bool theorem1_predict(i64 m) {
  if (m < 1 || m % 24 != 11)
    throw Error(Errc::wrong_residue, "theorem1_predict: " + std::to_string(m) + " is not 11 mod 24");
  const Factorization f = factorize(m);
  if (!f.squarefree()) throw Error(Errc::not_squarefree, "theorem1_predict: " + std::to_string(m) + " is not square-free");
  return matches_theorem_forms(form_pattern(f));
}

std::array<int, 4> mu_signs(i64 m) {
  const Factorization f = factorize(m);
  if (!f.squarefree()) throw Error(Errc::not_squarefree, "mu_signs: " + std::to_string(m) + " is not square-free");
  std::array<int, 4> mu{1, 1, 1, 1};
  for (const auto& [p, e] : f.factors) {
    const PrimeClass c = classify_prime(p);
    if (!in_s(c)) throw Error(Errc::outside_s, "mu_signs: prime factor " + std::to_string(p) + " is outside S");
    mu[static_cast<std::size_t>(c) - 1] *= -1;
  }
  return mu;
}

bool odd_indicator(i64 n) {
  if (n < 0) throw Error(Errc::invalid_argument, "odd_indicator: n must be >= 0");
  const i64 m = checked_add(checked_mul(24, n), 11);
  const Factorization f = factorize(m);
  if (f.squarefree()) return matches_theorem_forms(form_pattern(f));
  return (rep_count(m, kForm5211) / 2) % 2 == 1;
}

}  // namespace schurpar
