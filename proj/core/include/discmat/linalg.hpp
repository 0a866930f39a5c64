#pragma once

#include <cstddef>

#include "discmat/matrix.hpp"

namespace discmat {

/// Determinant by fraction-free (Bareiss) elimination. Pivots are the first
/// nonzero entry of each column, scanning rows top to bottom; every
/// intermediate division is exact.
MultiPoly det_fraction_free(const PolyMatrix& m);

/// Determinant of a rational matrix by Gaussian elimination.
Rational det_rational(const QMatrix& m);

struct RankResult {
  std::size_t rank = 0;
  std::size_t nullity = 0;  // cols - rank
  friend bool operator==(const RankResult&, const RankResult&) = default;
};

RankResult rank_exact(const QMatrix& m);

}  // namespace discmat
