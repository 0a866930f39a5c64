#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "discmat/matrix.hpp"
#include "discmat/multipoly.hpp"

namespace discmat {

/// x^x * y^y with integer (possibly negative) exponents.
struct LaurentMono {
  int x = 0;
  int y = 0;

  int degree() const { return x + y; }
  Monomial monomial() const { return Monomial::xy(x, y); }
  /// Same spelling as Monomial::str(): "1", "y^2", "x^-2*y^-1".
  std::string str() const { return monomial().str(); }

  friend bool operator==(const LaurentMono&, const LaurentMono&) = default;
};

enum class CohKind { H0, H1 };

/// Ordered monomial basis of H^0 or H^1 of O(twist) on the projective line.
///   H0(d), d >= 0:  x^i y^(d-i), i = 0, ..., d  (y^d first)
///   H1(d), d <= -2: x^-a y^-b, a, b >= 1, a + b = -d, a decreasing
/// Spaces outside those ranges are empty.
struct CohBasis {
  CohKind kind = CohKind::H0;
  int twist = 0;
  std::vector<LaurentMono> elements;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> index_of(const LaurentMono& m) const;
  std::vector<Label> labels(const std::string& prefix = {}) const;
};

CohBasis h0_basis(int twist);
CohBasis h1_basis(int twist);

}  // namespace discmat
