#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "discmat/multipoly.hpp"
#include "discmat/rational.hpp"

namespace discmat {

/// Row or column tag: a Laurent monomial such as "x^-2*y^-1", optionally
/// prefixed by a block name ("Fxx|x^-2*y^-1").
using Label = std::string;

/// Dense row-major matrix of polynomials with row/column basis labels.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  /// Zero matrix with index labels.
  PolyMatrix(std::size_t rows, std::size_t cols, int nvars);
  PolyMatrix(std::size_t rows, std::size_t cols, int nvars, std::vector<MultiPoly> entries,
             std::vector<Label> row_labels, std::vector<Label> col_labels);

  static PolyMatrix identity(std::size_t k, int nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int nvars() const { return nvars_; }
  bool is_square() const { return rows_ == cols_; }

  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  MultiPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const MultiPoly& at(std::size_t r, std::size_t c) const;

  const std::vector<MultiPoly>& entries() const { return entries_; }
  const std::vector<Label>& row_labels() const { return row_labels_; }
  const std::vector<Label>& col_labels() const { return col_labels_; }
  void set_row_labels(std::vector<Label> labels);
  void set_col_labels(std::vector<Label> labels);

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& block);
  PolyMatrix row(std::size_t r) const;
  PolyMatrix transpose() const;
  PolyMatrix without(std::size_t r, std::size_t c) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int nvars_ = 0;
  std::vector<MultiPoly> entries_;
  std::vector<Label> row_labels_;
  std::vector<Label> col_labels_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const Rational& c, const PolyMatrix& m);

/// Dense row-major matrix of rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Substitutes into every entry.
PolyMatrix specialize(const PolyMatrix& m, const Assignment& assignment);
/// Full specialization; throws std::invalid_argument if any entry stays symbolic.
QMatrix evaluate(const PolyMatrix& m, const Assignment& assignment);
/// Lifts a rational matrix to constant polynomials.
PolyMatrix to_poly_matrix(const QMatrix& m, int nvars);

}  // namespace discmat
