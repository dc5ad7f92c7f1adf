#pragma once

#include <cstdint>
#include <string>

#include "schurpar/error.hpp"

namespace schurpar {

using i64 = std::int64_t;
using u64 = std::uint64_t;

[[noreturn]] inline void throw_overflow(const char* op) {
  throw Error(Errc::overflow, std::string("64-bit overflow in ") + op);
}

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
  return r;
}

inline u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
  return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

}  // namespace schurpar
