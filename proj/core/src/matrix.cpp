#include "discmat/matrix.hpp"

#include <stdexcept>

namespace discmat {

namespace {

std::vector<Label> index_labels(std::size_t k) {
  std::vector<Label> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, int nvars)
    : rows_(rows),
      cols_(cols),
      nvars_(nvars),
      entries_(rows * cols, MultiPoly(nvars)),
      row_labels_(index_labels(rows)),
      col_labels_(index_labels(cols)) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, int nvars, std::vector<MultiPoly> entries,
                       std::vector<Label> row_labels, std::vector<Label> col_labels)
    : rows_(rows),
      cols_(cols),
      nvars_(nvars),
      entries_(std::move(entries)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("PolyMatrix: entry count mismatch");
  if (row_labels_.size() != rows_ || col_labels_.size() != cols_) {
    throw std::invalid_argument("PolyMatrix: label count mismatch");
  }
}

PolyMatrix PolyMatrix::identity(std::size_t k, int nvars) {
  PolyMatrix m(k, k, nvars);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = MultiPoly::constant(nvars, 1);
  return m;
}

const MultiPoly& PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("PolyMatrix::at");
  return (*this)(r, c);
}

void PolyMatrix::set_row_labels(std::vector<Label> labels) {
  if (labels.size() != rows_) throw std::invalid_argument("PolyMatrix: row label count mismatch");
  row_labels_ = std::move(labels);
}

void PolyMatrix::set_col_labels(std::vector<Label> labels) {
  if (labels.size() != cols_) throw std::invalid_argument("PolyMatrix: column label count mismatch");
  col_labels_ = std::move(labels);
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& block) {
  if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_) {
    throw std::out_of_range("PolyMatrix::set_block: block does not fit");
  }
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) (*this)(r0 + r, c0 + c) = block(r, c);
  }
}

PolyMatrix PolyMatrix::row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("PolyMatrix::row");
  std::vector<MultiPoly> e(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                           entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  return PolyMatrix(1, cols_, nvars_, std::move(e), {row_labels_[r]}, col_labels_);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, nvars_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

PolyMatrix PolyMatrix::without(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("PolyMatrix::without");
  std::vector<MultiPoly> e;
  e.reserve((rows_ - 1) * (cols_ - 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != c) e.push_back((*this)(i, j));
    }
  }
  std::vector<Label> rl;
  std::vector<Label> cl;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i != r) rl.push_back(row_labels_[i]);
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    if (j != c) cl.push_back(col_labels_[j]);
  }
  return PolyMatrix(rows_ - 1, cols_ - 1, nvars_, std::move(e), std::move(rl), std::move(cl));
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_ &&
         a.row_labels_ == b.row_labels_ && a.col_labels_ == b.col_labels_;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("PolyMatrix product: dimension mismatch");
  const int nvars = std::max(a.nvars(), b.nvars());
  PolyMatrix out(a.rows(), b.cols(), nvars);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      MultiPoly acc(nvars);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  out.set_row_labels(a.row_labels());
  out.set_col_labels(b.col_labels());
  return out;
}

PolyMatrix operator*(const Rational& c, const PolyMatrix& m) {
  PolyMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t k = 0; k < m.cols(); ++k) out(r, k) *= c;
  }
  return out;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("QMatrix: entry count mismatch");
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("QMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t k) {
  QMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = Rational(1);
  return m;
}

PolyMatrix specialize(const PolyMatrix& m, const Assignment& assignment) {
  std::vector<MultiPoly> e;
  e.reserve(m.entries().size());
  for (const auto& p : m.entries()) e.push_back(specialize(p, assignment));
  return PolyMatrix(m.rows(), m.cols(), m.nvars(), std::move(e), m.row_labels(), m.col_labels());
}

QMatrix evaluate(const PolyMatrix& m, const Assignment& assignment) {
  std::vector<Rational> e;
  e.reserve(m.entries().size());
  for (const auto& p : m.entries()) e.push_back(evaluate(p, assignment));
  return QMatrix(m.rows(), m.cols(), std::move(e));
}

PolyMatrix to_poly_matrix(const QMatrix& m, int nvars) {
  PolyMatrix out(m.rows(), m.cols(), nvars);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = MultiPoly::constant(nvars, m(r, c));
  }
  return out;
}

}  // namespace discmat
