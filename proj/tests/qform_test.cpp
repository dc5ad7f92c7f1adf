#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "schurpar/arith.hpp"
#include "schurpar/qform.hpp"

using namespace schurpar;

namespace {

// Brute 2-D scan; the box comes from 4a*f = (2ax+by)^2 + |D| y^2.
std::vector<RepSolution> brute_solutions(i64 n, const QuadForm& f) {
  std::vector<RepSolution> out;
  const i64 D = -f.discriminant();
  const i64 ybound = static_cast<i64>(isqrt(static_cast<u64>(4 * f.a * n / D))) + 1;
  const i64 xbound = static_cast<i64>(isqrt(static_cast<u64>(4 * f.c * n / D))) + 1;
  for (i64 x = -xbound; x <= xbound; ++x)
    for (i64 y = -ybound; y <= ybound; ++y)
      if (f.a * x * x + f.b * x * y + f.c * y * y == n) out.push_back({x, y});
  return out;
}

bool is_reduced(const QuadForm& f) {
  if (!(std::abs(f.b) <= f.a && f.a <= f.c)) return false;
  if ((std::abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

// Every reduced form reachable by a unimodular matrix with small entries.
std::set<QuadForm> reduced_images(const QuadForm& f, i64 box) {
  std::set<QuadForm> out;
  for (i64 p = -box; p <= box; ++p)
    for (i64 q = -box; q <= box; ++q)
      for (i64 r = -box; r <= box; ++r)
        for (i64 s = -box; s <= box; ++s) {
          if (p * s - q * r != 1) continue;
          const QuadForm g{f(p, r), 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s, f(q, s)};
          if (is_reduced(g)) out.insert(g);
        }
  return out;
}

std::vector<QuadForm> brute_reduced_forms(i64 D) {
  std::vector<QuadForm> out;
  for (i64 a = 1; 3 * a * a <= -D; ++a)
    for (i64 b = -a; b <= a; ++b) {
      const i64 num = b * b - D;
      if (num % (4 * a)) continue;
      const QuadForm f{a, b, num / (4 * a)};
      if (is_reduced(f) && gcd(gcd(f.a, f.b), f.c) == 1) out.push_back(f);
    }
  return out;
}

}  // namespace

TEST(QuadForm, Discriminants) {
  EXPECT_EQ(kFormF.discriminant(), -24);
  EXPECT_EQ(kFormG.discriminant(), -24);
  EXPECT_EQ(kForm5211.discriminant(), -216);
  EXPECT_EQ(kForm769.discriminant(), -216);
  EXPECT_EQ(kForm2027.discriminant(), -216);
  EXPECT_EQ(kForm1054.discriminant(), -216);
}

TEST(QuadForm, ParseAndPrint) {
  EXPECT_EQ(QuadForm::parse("5,-2,11"), (QuadForm{5, -2, 11}));
  EXPECT_EQ((QuadForm{7, 6, 9}).to_string(), "7,6,9");
  for (const char* bad : {"", "1,2", "1,2,3,4", "a,b,c", "1,,3", "1,2,x"}) EXPECT_THROW(QuadForm::parse(bad), Error) << bad;
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(kFormF), kFormF);
  EXPECT_EQ(reduce({11, -2, 5}), kForm5211);
  const QuadForm r = reduce({7, 20, 21});
  EXPECT_EQ(r.discriminant(), QuadForm({7, 20, 21}).discriminant());
  EXPECT_TRUE(is_reduced(r));
}

TEST(Reduce, AgreesWithUnimodularSearch) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<i64> d(-30, 30);
  int tried = 0;
  while (tried < 150) {
    const QuadForm f{d(rng), d(rng), d(rng)};
    if (!f.positive_definite()) continue;
    ++tried;
    const auto images = reduced_images(f, 6);
    const QuadForm r = reduce(f);
    ASSERT_TRUE(is_reduced(r));
    ASSERT_EQ(r.discriminant(), f.discriminant());
    // The reduced representative is unique; the search box may or may not
    // reach it, but it must never find a different one.
    for (const auto& g : images) ASSERT_EQ(g, r) << f.to_string();
  }
  const auto images = reduced_images({7, 20, 21}, 6);
  ASSERT_EQ(images.size(), 1u);
  EXPECT_EQ(*images.begin(), reduce({7, 20, 21}));
}

TEST(Reduce, PreservesRepresentationCounts) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<i64> d(-12, 12);
  int tried = 0;
  while (tried < 40) {
    const QuadForm f{d(rng), d(rng), d(rng)};
    if (!f.positive_definite()) continue;
    ++tried;
    const QuadForm r = reduce(f);
    for (i64 n = 0; n <= 300; ++n) ASSERT_EQ(brute_solutions(n, f).size(), brute_solutions(n, r).size()) << f.to_string() << " n=" << n;
  }
}

TEST(ReducedForms, Examples) {
  EXPECT_EQ(reduced_forms(-216),
            (std::vector<QuadForm>{{1, 0, 54}, {2, 0, 27}, {5, -2, 11}, {5, 2, 11}, {7, -6, 9}, {7, 6, 9}}));
  EXPECT_EQ(reduced_forms(-24), (std::vector<QuadForm>{{1, 0, 6}, {2, 0, 3}}));
  EXPECT_EQ(reduced_forms(-3), (std::vector<QuadForm>{{1, 1, 1}}));
  EXPECT_EQ(reduced_forms(-4), (std::vector<QuadForm>{{1, 0, 1}}));
}

TEST(ReducedForms, RejectsBadDiscriminants) {
  for (i64 D : {0, 5, -5, -6, -1}) EXPECT_THROW(reduced_forms(D), Error) << D;
}

TEST(ReducedForms, ClassNumbersMatchBruteEnumeration) {
  EXPECT_EQ(class_number(-23), 3);
  EXPECT_EQ(class_number(-47), 5);
  EXPECT_EQ(class_number(-71), 7);
  EXPECT_EQ(class_number(-20), 2);
  EXPECT_EQ(class_number(-56), 4);
  EXPECT_EQ(class_number(-216), 6);
  for (i64 D = -3; D >= -3000; --D) {
    const i64 r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    ASSERT_EQ(reduced_forms(D), brute_reduced_forms(D)) << D;
  }
}

TEST(RepSolutions, Examples) {
  EXPECT_EQ(rep_solutions(11, kFormF).size(), 0u);
  EXPECT_EQ(rep_count(11, kFormF), 0);
  EXPECT_EQ(rep_count(35, kFormF), 0);
  // (+-2, +-3) and (+-4, +-1) both give 35.
  EXPECT_EQ(rep_count(35, kFormG), 8);
  EXPECT_EQ(rep_solutions(11, kForm5211), (std::vector<RepSolution>{{0, -1}, {0, 1}}));
  EXPECT_EQ(rep_solutions(35, kForm5211), (std::vector<RepSolution>{{-2, -1}, {2, 1}}));
  EXPECT_EQ(rep_count(59, kForm5211), 0);
  EXPECT_EQ(rep_count(59, kForm2027), 4);
  EXPECT_EQ(rep_count(1, kFormF), 2);
  EXPECT_EQ(rep_count(0, kFormF), 1);
  EXPECT_EQ(rep_solutions(0, kFormF), (std::vector<RepSolution>{{0, 0}}));
  EXPECT_EQ(rep_solutions(35, kFormG),
            (std::vector<RepSolution>{{-4, -1}, {-4, 1}, {-2, -3}, {-2, 3}, {2, -3}, {2, 3}, {4, -1}, {4, 1}}));
  EXPECT_THROW(rep_count(-1, kFormF), Error);
}

TEST(RepSolutions, MatchBruteScan) {
  const std::vector<QuadForm> forms{kFormF, kFormG, kForm5211, {5, -2, 11}, kForm769, {7, -6, 9}, kForm2027, kForm1054, {1, 1, 1}, {3, 2, 7}};
  for (const auto& f : forms)
    for (i64 n = 0; n <= 600; ++n) ASSERT_EQ(rep_solutions(n, f), brute_solutions(n, f)) << f.to_string() << " n=" << n;
}

TEST(RepSolutions, EvenCountsOnDisc216) {
  for (const auto& f : reduced_forms(-216))
    for (i64 n = 1; n <= 10000; ++n) ASSERT_EQ(rep_count(n, f) % 2, 0) << f.to_string() << " " << n;
}

TEST(RepSolutions, OppositeFormsAgree) {
  for (i64 n = 0; n <= 10000; ++n) {
    ASSERT_EQ(rep_count(n, kForm5211), rep_count(n, {5, -2, 11})) << n;
    ASSERT_EQ(rep_count(n, kForm769), rep_count(n, {7, -6, 9})) << n;
  }
}

TEST(Compose, Examples) {
  const auto ff = dirichlet_compose(CompositionKind::ff, {1, 1}, {1, 1});
  EXPECT_EQ(ff.result, FormKind::f);
  EXPECT_EQ(ff.first, (RepSolution{-5, 2}));
  const auto fg = dirichlet_compose(CompositionKind::fg, {1, 1}, {1, 1});
  EXPECT_EQ(fg.result, FormKind::g);
  EXPECT_EQ(fg.first, (RepSolution{-2, 3}));
  EXPECT_EQ(fg.second, (RepSolution{4, -1}));
  const auto id = dirichlet_compose(CompositionKind::ff, {1, 0}, {1, 0});
  EXPECT_EQ(id.first, (RepSolution{1, 0}));
  EXPECT_EQ(id.second, (RepSolution{1, 0}));
  const auto gg = dirichlet_compose(CompositionKind::gg, {1, 1}, {1, 1});
  EXPECT_EQ(gg.result, FormKind::f);
  EXPECT_EQ(gg.first, (RepSolution{-1, 2}));
  EXPECT_EQ(gg.second, (RepSolution{5, 0}));
  EXPECT_EQ(parse_composition_kind("fg"), CompositionKind::fg);
  EXPECT_THROW(parse_composition_kind("gf"), Error);
}

TEST(Compose, ValuesMultiply) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<i64> d(-1000, 1000);
  for (int i = 0; i < 100000; ++i) {
    for (auto kind : {CompositionKind::ff, CompositionKind::fg, CompositionKind::gg}) {
      const RepSolution s0{d(rng), d(rng)}, s1{d(rng), d(rng)};
      const QuadForm& left = kind == CompositionKind::gg ? kFormG : kFormF;
      const QuadForm& right = kind == CompositionKind::ff ? kFormF : kFormG;
      const i64 product = left(s0.x, s0.y) * right(s1.x, s1.y);
      const Composition c = dirichlet_compose(kind, s0, s1);
      const QuadForm& out = form_of(c.result);
      ASSERT_EQ(out(c.first.x, c.first.y), product);
      ASSERT_EQ(out(c.second.x, c.second.y), product);
      ASSERT_EQ(c.result, kind == CompositionKind::fg ? FormKind::g : FormKind::f);
    }
  }
}
