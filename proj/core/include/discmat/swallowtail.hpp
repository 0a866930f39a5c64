#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "discmat/formulas.hpp"
#include "discmat/matrix.hpp"

namespace discmat {

/// [[partial2, D1], [0, Bezout row of y^(n-2)]], square of size 3n - 5.
PolyMatrix assemble(int n);

/// One elimination step; row and col index the matrix as it was at that step.
struct PivotRecord {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational pivot;
  friend bool operator==(const PivotRecord&, const PivotRecord&) = default;
};

struct ReductionLog {
  std::vector<PivotRecord> pivots;

  /// det(before) = det_factor() * det(after).
  Rational det_factor() const;
};

struct Reduction {
  PolyMatrix matrix;
  ReductionLog log;
};

/// Repeatedly pivots on the first nonzero constant entry in column-major
/// order, replacing the matrix by the Schur complement of that entry, until
/// no constant entry is left. `substitutions` are applied first.
Reduction minimize(const PolyMatrix& m, const std::optional<Assignment>& substitutions = std::nullopt);

struct SwallowtailPresentation {
  int n = 0;
  PolyMatrix full;
  PolyMatrix reduced;        // a0 symbolic
  PolyMatrix monic_minimal;  // after a0 := 1
  ReductionLog reduction_log;
  ReductionLog monic_log;
};

SwallowtailPresentation present(int n);

enum class VerifyMode { symbolic, sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::symbolic;
  int samples = 50;
  std::uint64_t seed = 42;
};

/// Finds (c, e) with det(m) = c * a0^e * D_n. With `monic` set the matrix is
/// compared against D_n restricted to a0 = 1 and e is always 0.
/// Throws FormulaVerificationError when no such relation holds.
DetRelation verify_det_relation(const PolyMatrix& m, int n, const VerifyOptions& options, bool monic = false);

/// verify_det_relation(assemble(n), n, options).
DetRelation verify_det(int n, const VerifyOptions& options);

/// Builds the matrix of the requested formula. When `verify` is given the
/// determinant relation is measured with it; the Sylvester relation is known
/// in closed form and is always filled in.
FormulaBundle make_bundle(FormulaKind kind, int n, const std::optional<VerifyOptions>& verify = std::nullopt);

}  // namespace discmat
