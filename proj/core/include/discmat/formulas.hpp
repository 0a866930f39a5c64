#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "discmat/basis.hpp"
#include "discmat/matrix.hpp"
#include "discmat/multipoly.hpp"

namespace discmat {

/// F = sum_i a_i x^(n-i) y^i together with its partials up to order two.
class UniversalForm {
 public:
  explicit UniversalForm(int n);

  int n() const { return n_; }
  int nvars() const { return n_ + 1; }
  const MultiPoly& F() const { return partial(0, 0); }
  /// d^(i+j) F / dx^i dy^j for i + j <= 2.
  const MultiPoly& partial(int i, int j) const;

  const MultiPoly& Fx() const { return partial(1, 0); }
  const MultiPoly& Fy() const { return partial(0, 1); }
  const MultiPoly& Fxx() const { return partial(2, 0); }
  const MultiPoly& Fxy() const { return partial(1, 1); }
  const MultiPoly& Fyy() const { return partial(0, 2); }

 private:
  int n_;
  std::array<std::array<MultiPoly, 3>, 3> partials_;
};

/// Throws std::invalid_argument unless 2 <= n <= kMaxDegree.
UniversalForm universal_form(int n);

enum class FormulaKind { sylvester, bezout, swallowtail_full, swallowtail_minimal, swallowtail_monic };

std::string to_string(FormulaKind kind);
std::optional<FormulaKind> parse_formula_kind(const std::string& text);

/// det(matrix) = c * a0^e * D_n.
struct DetRelation {
  Rational c;
  int a0_exponent = 0;
  friend bool operator==(const DetRelation&, const DetRelation&) = default;
};

struct FormulaBundle {
  FormulaKind kind;
  int n;
  PolyMatrix matrix;
  std::optional<DetRelation> det_relation;
};

/// Sylvester matrix of p and q as polynomials in x (y is set to 1). The
/// first deg q rows hold shifted coefficients of p, the next deg p rows
/// those of q. Throws std::invalid_argument for a zero or constant input.
PolyMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q);

/// D_n = (-1)^(n(n-1)/2) * Res(f, f_x) / a0, with Res the Sylvester determinant.
MultiPoly discriminant_oracle(int n);

/// The same oracle evaluated at a concrete coefficient vector (a0 != 0),
/// computed from the rational Sylvester matrix.
Rational discriminant_at(const std::vector<Rational>& coeffs);

/// Raw Bezoutian coefficients b_ij of (F_x, F_y): entry (i, j) multiplies
/// x0^i y0^(n-2-i) x1^j y1^(n-2-j). Symmetric.
PolyMatrix bezout_coefficients(int n);

/// Bezout matrix oriented as the map H1(-n) -> H0(n-2): rows follow
/// h0_basis(n-2) (y^(n-2) first), columns follow h1_basis(-n). Equals
/// -B J where B = bezout_coefficients(n) and J reverses columns.
PolyMatrix bezout_matrix(int n);

/// Single row of bezout_matrix(n) selected by its H0 label.
/// Throws std::invalid_argument for an unknown label.
PolyMatrix bezout_row(int n, const LaurentMono& label);

}  // namespace discmat
