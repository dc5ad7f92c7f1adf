#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "schurpar/checked.hpp"

namespace schurpar {

// The form a*x^2 + b*x*y + c*y^2.
struct QuadForm {
  i64 a = 0;
  i64 b = 0;
  i64 c = 0;

  i64 discriminant() const;
  bool positive_definite() const;
  i64 operator()(i64 x, i64 y) const;  // checked evaluation

  std::string to_string() const;  // "a,b,c"
  static QuadForm parse(std::string_view text);

  friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

struct RepSolution {
  i64 x = 0;
  i64 y = 0;

  friend auto operator<=>(const RepSolution&, const RepSolution&) = default;
};

inline constexpr QuadForm kFormF{1, 0, 6};    // x^2 + 6y^2
inline constexpr QuadForm kFormG{2, 0, 3};    // 2x^2 + 3y^2
inline constexpr QuadForm kForm5211{5, 2, 11};
inline constexpr QuadForm kForm769{7, 6, 9};
inline constexpr QuadForm kForm2027{2, 0, 27};
inline constexpr QuadForm kForm1054{1, 0, 54};

inline i64 discriminant(const QuadForm& f) { return f.discriminant(); }

// Equivalent reduced form: |b| <= a <= c, and b >= 0 when |b| = a or a = c.
QuadForm reduce(QuadForm f);

// Primitive reduced forms of discriminant D < 0, sorted by (a, b).
std::vector<QuadForm> reduced_forms(i64 D);
i64 class_number(i64 D);

// All (x, y) with f(x, y) = n, lexicographically ordered.
std::vector<RepSolution> rep_solutions(i64 n, const QuadForm& f);
i64 rep_count(i64 n, const QuadForm& f);

enum class CompositionKind { ff, fg, gg };
enum class FormKind { f, g };

std::string_view to_string(CompositionKind kind) noexcept;
std::string_view to_string(FormKind kind) noexcept;
CompositionKind parse_composition_kind(std::string_view text);

inline const QuadForm& form_of(FormKind k) noexcept { return k == FormKind::f ? kFormF : kFormG; }

struct Composition {
  FormKind result;
  RepSolution first;
  RepSolution second;
};

// The three explicit compositions of x^2+6y^2 and 2x^2+3y^2 solutions.
// For ff and gg the inputs are read as f- resp. g-solutions; for fg, s0 is an
// f-solution and s1 a g-solution.
Composition dirichlet_compose(CompositionKind kind, const RepSolution& s0, const RepSolution& s1);

}  // namespace schurpar
