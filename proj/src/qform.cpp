#include "schurpar/qform.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "schurpar/arith.hpp"

namespace schurpar {

namespace {

using i128 = __int128;

void require_definite(const QuadForm& f, const char* where) {
  if (!f.positive_definite())
    throw Error(Errc::invalid_argument, std::string(where) + ": form " + f.to_string() + " is not positive definite");
}

i64 narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw_overflow("narrow");
  return static_cast<i64>(v);
}

// floor division for positive divisor
i64 floor_div(i64 num, i64 den) {
  i64 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace

i64 QuadForm::discriminant() const { return checked_sub(checked_mul(b, b), checked_mul(4, checked_mul(a, c))); }

bool QuadForm::positive_definite() const { return a > 0 && i128(b) * b < 4 * i128(a) * c; }

i64 QuadForm::operator()(i64 x, i64 y) const {
  return checked_add(checked_add(checked_mul(a, checked_mul(x, x)), checked_mul(b, checked_mul(x, y))),
                     checked_mul(c, checked_mul(y, y)));
}

std::string QuadForm::to_string() const {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

QuadForm QuadForm::parse(std::string_view text) {
  i64 v[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(',', pos) : text.size();
    if (end == std::string_view::npos) break;
    const auto part = text.substr(pos, end - pos);
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v[i]);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw Error(Errc::invalid_argument, "bad form '" + std::string(text) + "', expected a,b,c");
    if (i == 2) return {v[0], v[1], v[2]};
    pos = end + 1;
  }
  throw Error(Errc::invalid_argument, "bad form '" + std::string(text) + "', expected a,b,c");
}

QuadForm reduce(QuadForm f) {
  require_definite(f, "reduce");
  auto normalize = [&f] {
    // x -> x + k*y with k chosen so that -a < b <= a.
    const i64 two_a = checked_mul(2, f.a);
    const i64 k = floor_div(checked_sub(f.a, f.b), two_a);
    if (k == 0) return;
    const i64 nb = checked_add(f.b, checked_mul(two_a, k));
    const i64 nc = narrow(i128(f.a) * k * k + i128(f.b) * k + f.c);
    f.b = nb;
    f.c = nc;
  };
  normalize();
  while (f.a > f.c) {
    std::swap(f.a, f.c);
    f.b = -f.b;
    normalize();
  }
  if (f.a == f.c && f.b < 0) f.b = -f.b;
  return f;
}

std::vector<QuadForm> reduced_forms(i64 D) {
  if (D >= 0) throw Error(Errc::invalid_argument, "reduced_forms: discriminant must be negative");
  const i64 r = ((D % 4) + 4) % 4;
  if (r != 0 && r != 1) throw Error(Errc::invalid_argument, "reduced_forms: discriminant must be 0 or 1 mod 4");

  std::vector<QuadForm> out;
  const i64 bmax = static_cast<i64>(isqrt(static_cast<u64>(-D) / 3));
  for (i64 b = (r == 1 ? 1 : 0); b <= bmax; b += 2) {
    const i64 ac = (b * b - D) / 4;
    for (i64 a = std::max<i64>(b, 1); a * a <= ac; ++a) {
      if (ac % a != 0) continue;
      const i64 c = ac / a;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      out.push_back({a, b, c});
      if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadForm& l, const QuadForm& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  });
  return out;
}

i64 class_number(i64 D) { return static_cast<i64>(reduced_forms(D).size()); }

namespace {

// Calls emit(x, y) for every solution with the given y. Uses
// 4a f(x,y) = (2ax + by)^2 + |D| y^2.
template <typename Emit>
void solutions_at_y(i64 n, const QuadForm& f, i128 absD, i64 y, Emit&& emit) {
  const i128 d = i128(4) * f.a * n - absD * y * y;
  if (d < 0) return;
  if (d > i128(UINT64_MAX)) throw_overflow("rep_solutions");
  const u64 s = isqrt(static_cast<u64>(d));
  if (i128(s) * s != d) return;
  const i128 two_a = 2 * i128(f.a);
  const i128 base = -i128(f.b) * y;
  const i128 roots[2] = {base - i128(s), base + i128(s)};
  for (int k = 0; k < (s == 0 ? 1 : 2); ++k) {
    if (roots[k] % two_a == 0) emit(narrow(roots[k] / two_a), y);
  }
}

i64 y_bound(i64 n, const QuadForm& f, i128 absD) {
  const i128 num = i128(4) * f.a * n;
  return static_cast<i64>(isqrt(static_cast<u64>(num / absD)));
}

}  // namespace

std::vector<RepSolution> rep_solutions(i64 n, const QuadForm& f) {
  require_definite(f, "rep_solutions");
  if (n < 0) throw Error(Errc::invalid_argument, "rep_solutions: n must be >= 0");
  const i128 absD = -i128(f.discriminant());
  const i64 ymax = y_bound(n, f, absD);
  std::vector<RepSolution> out;
  for (i64 y = -ymax; y <= ymax; ++y)
    solutions_at_y(n, f, absD, y, [&](i64 x, i64 yy) { out.push_back({x, yy}); });
  std::sort(out.begin(), out.end());
  return out;
}

i64 rep_count(i64 n, const QuadForm& f) {
  require_definite(f, "rep_count");
  if (n < 0) throw Error(Errc::invalid_argument, "rep_count: n must be >= 0");
  if (n == 0) return 1;
  // (x, y) -> (-x, -y) pairs solutions at y and -y.
  const i128 absD = -i128(f.discriminant());
  const i64 ymax = y_bound(n, f, absD);
  i64 count = 0;
  solutions_at_y(n, f, absD, 0, [&](i64, i64) { ++count; });
  for (i64 y = 1; y <= ymax; ++y)
    solutions_at_y(n, f, absD, y, [&](i64, i64) { count += 2; });
  return count;
}

std::string_view to_string(CompositionKind kind) noexcept {
  switch (kind) {
    case CompositionKind::ff: return "ff";
    case CompositionKind::fg: return "fg";
    case CompositionKind::gg: return "gg";
  }
  return "?";
}

std::string_view to_string(FormKind kind) noexcept { return kind == FormKind::f ? "f" : "g"; }

CompositionKind parse_composition_kind(std::string_view text) {
  if (text == "ff") return CompositionKind::ff;
  if (text == "fg") return CompositionKind::fg;
  if (text == "gg") return CompositionKind::gg;
  throw Error(Errc::invalid_argument, "unknown composition kind '" + std::string(text) + "'");
}

Composition dirichlet_compose(CompositionKind kind, const RepSolution& s0, const RepSolution& s1) {
  const i64 x0 = s0.x, y0 = s0.y, x1 = s1.x, y1 = s1.y;
  const i64 xx = checked_mul(x0, x1);
  const i64 yy = checked_mul(y0, y1);
  const i64 x0y1 = checked_mul(x0, y1);
  const i64 y0x1 = checked_mul(y0, x1);
  switch (kind) {
    case CompositionKind::ff:
      return {FormKind::f,
              {checked_sub(xx, checked_mul(6, yy)), checked_add(x0y1, y0x1)},
              {checked_add(xx, checked_mul(6, yy)), checked_sub(x0y1, y0x1)}};
    case CompositionKind::fg:
      return {FormKind::g,
              {checked_sub(xx, checked_mul(3, yy)), checked_add(x0y1, checked_mul(2, y0x1))},
              {checked_add(xx, checked_mul(3, yy)), checked_sub(x0y1, checked_mul(2, y0x1))}};
    case CompositionKind::gg:
      return {FormKind::f,
              {checked_sub(checked_mul(2, xx), checked_mul(3, yy)), checked_add(x0y1, y0x1)},
              {checked_add(checked_mul(2, xx), checked_mul(3, yy)), checked_sub(x0y1, y0x1)}};
  }
  throw Error(Errc::invalid_argument, "dirichlet_compose: bad kind");
}

}  // namespace schurpar
