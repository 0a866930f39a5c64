#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "discmat/rational.hpp"

namespace discmat {

/// Number of coefficient variables a0..a13 that fit in a monomial; bounds the
/// supported form degree at n = 13.
inline constexpr int kMaxCoefficientVars = 14;
inline constexpr int kSlotX = 14;
inline constexpr int kSlotY = 15;
inline constexpr int kSlots = 16;
inline constexpr int kMaxDegree = kMaxCoefficientVars - 1;

/// A ring variable: one of a0..a13, x or y.
class Var {
 public:
  static Var a(int i);
  static Var x() { return Var(kSlotX); }
  static Var y() { return Var(kSlotY); }

  int slot() const { return slot_; }
  bool is_coefficient() const { return slot_ < kMaxCoefficientVars; }
  std::string name() const;

  friend auto operator<=>(const Var&, const Var&) = default;

 private:
  explicit Var(int slot) : slot_(slot) {}
  int slot_;
};

/// Exponent vector over a0..a13, x, y. Negative exponents are only
/// meaningful in the x and y slots (Laurent mode).
struct Monomial {
  std::array<std::int16_t, kSlots> exp{};

  static Monomial of(Var v, int power = 1);
  static Monomial xy(int px, int py);

  int total_degree() const;
  int a_degree() const;
  bool is_one() const;
  bool has_negative() const;
  bool uses_xy() const { return exp[kSlotX] != 0 || exp[kSlotY] != 0; }
  /// Highest a-index with a nonzero exponent, or -1.
  int max_coefficient_index() const;

  Monomial operator*(const Monomial& o) const;
  /// Exponent-wise difference; no divisibility check.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;

  /// "1", "a0*a4", "a3^2", "x^-2*y^-1".
  std::string str() const;
  static Monomial parse(std::string_view text);

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order (a0 > a1 > ... > x > y). Returns true when
/// `a` ranks strictly above `b`.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Grading deg a_i = (1, n - i, i).
struct TriDegree {
  int a = 0;
  int x = 0;
  int y = 0;
  friend bool operator==(const TriDegree&, const TriDegree&) = default;
};

std::ostream& operator<<(std::ostream& os, const TriDegree& d);

/// Sparse polynomial with exact rational coefficients in a0..a_{nvars-1} and,
/// optionally, Laurent monomials in x and y. Terms are kept in descending
/// grlex order with no zero coefficients.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars);

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, Var v);
  static MultiPoly monomial(int nvars, const Monomial& m, const Rational& c = Rational(1));
  /// Sums duplicate monomials, drops zeros and sorts.
  static MultiPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> as_constant() const;
  Rational coefficient(const Monomial& m) const;
  const Term& leading_term() const { return terms_.front(); }
  bool has_laurent() const;
  bool uses_xy() const;
  /// Minimum / maximum total a-degree over the terms (0 for the zero polynomial).
  int min_a_degree() const;
  int max_a_degree() const;

  /// Same polynomial viewed in a ring with `nvars` coefficient variables.
  MultiPoly with_nvars(int nvars) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;
  MultiPoly pow(int exponent) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Human-readable form such as "a1*a3 - 16*a0*a4".
  std::string str() const;

 private:
  static MultiPoly from_canonical(int nvars, std::vector<Term> terms);
  int nvars_ = 0;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

enum class ArithOp { add, sub, mul };

/// Throws VarcountMismatch when both operands carry coefficient variables
/// and their counts differ.
MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, ArithOp op);

/// Quotient of an exact division. x and y are treated as Laurent variables,
/// so monomials in them are units. Throws InexactDivision on a nonzero
/// remainder and std::domain_error when `den` is zero.
MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den);
std::optional<MultiPoly> try_exact_div(const MultiPoly& num, const MultiPoly& den);

MultiPoly differentiate(const MultiPoly& p, Var v);

using Assignment = std::map<Var, Rational>;

/// Substitutes the assigned variables. Throws std::domain_error when a
/// variable carrying a negative exponent is assigned zero.
MultiPoly specialize(const MultiPoly& p, const Assignment& assignment);
/// Full evaluation; throws std::invalid_argument if a variable is left free.
Rational evaluate(const MultiPoly& p, const Assignment& assignment);

/// Assignment a_i := coeffs[i].
Assignment coefficient_assignment(const std::vector<Rational>& coeffs);

std::optional<TriDegree> tri_degree(const Monomial& m, int n);
/// True iff every term of `p` (a-variables only) has tri-degree `expected`
/// under deg a_i = (1, n - i, i).
bool tri_degree_check(const MultiPoly& p, const TriDegree& expected, int n);

}  // namespace discmat
