#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "discmat/basis.hpp"
#include "discmat/matrix.hpp"
#include "discmat/multipoly.hpp"

namespace discmat {

/// A linear map between Cech cohomology spaces together with its bases.
/// Targets with several components (the three blocks of the second
/// partials) list one basis per block, stacked top to bottom in `matrix`.
struct CechMap {
  CohBasis src;
  std::vector<CohBasis> tgt;
  PolyMatrix matrix;
};

/// Keeps the terms whose x- and y-exponents are both <= -1.
MultiPoly h1_truncate(const MultiPoly& p);

/// Matrix of v -> g * v between two bases of the same kind. For H1 targets
/// the product is truncated first. Throws std::invalid_argument when g is
/// not homogeneous of degree tgt.twist - src.twist in x, y or when the
/// kinds differ.
PolyMatrix mult_map(const MultiPoly& g, const CohBasis& src, const CohBasis& tgt);

/// Stack of mult_map(F_xx), mult_map(F_xy), mult_map(F_yy) from
/// H1(src_twist) to H1(src_twist + n - 2).
CechMap generalized_sylvester(int n, int src_twist);

/// generalized_sylvester(n, 3 - 2n): a 3(n-2) x (2n-4) matrix.
PolyMatrix partial2_matrix(int n);

/// Lifting of H1(-n) into the three H1(1 - n) blocks; constant entries.
PolyMatrix d1_matrix(int n);

/// The antisymmetric 3x3 block matrix
///   [[0, F_yy, -F_xy], [-F_yy, 0, F_xx], [F_xy, -F_xx, 0]]
/// acting from three copies of H1(twist) to three copies of H1(twist + n - 2).
PolyMatrix koszul_second_differential(int n, int twist);

/// Bezout map H1(-n) -> H0(n-2) computed through the double complex.
/// Throws std::logic_error if a term survives on both charts or the two
/// chart computations disagree.
PolyMatrix a_via_cech(int n);

/// `target(r, c) == sign * source(perm[r], perm[c])` for all r, c.
struct Alignment {
  int sign = 1;
  std::vector<std::size_t> permutation;
  friend bool operator==(const Alignment&, const Alignment&) = default;
};

/// Searches signs and simultaneous row/column permutations, trying the
/// identity first. Only square matrices of size at most 8 are searched.
std::optional<Alignment> align(const PolyMatrix& source, const PolyMatrix& target);

}  // namespace discmat
