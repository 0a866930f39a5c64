#include "discmat/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace discmat {

namespace {

MultiPoly divide_by_pivot(const MultiPoly& num, const MultiPoly& prev) {
  if (auto c = prev.as_constant()) {
    if (c->is_one()) return num;
    return num * c->inverse();
  }
  return exact_div(num, prev);
}

}  // namespace

MultiPoly det_fraction_free(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det_fraction_free: matrix is not square");
  const std::size_t n = m.rows();
  const int nvars = m.nvars();
  if (n == 0) return MultiPoly::constant(nvars, 1);

  std::vector<MultiPoly> a = m.entries();
  auto at = [&](std::size_t r, std::size_t c) -> MultiPoly& { return a[r * n + c]; };

  bool negate = false;
  MultiPoly prev = MultiPoly::constant(nvars, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return MultiPoly(nvars);
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(pivot, c), at(k, c));
      negate = !negate;
    }
    const MultiPoly& p = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const MultiPoly lead = at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = p * at(i, j);
        if (!lead.is_zero() && !at(k, j).is_zero()) num -= lead * at(k, j);
        at(i, j) = divide_by_pivot(num, prev);
      }
      at(i, k) = MultiPoly(nvars);
    }
    prev = p;
  }
  MultiPoly det = at(n - 1, n - 1);
  return negate ? -det : det;
}

Rational det_rational(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_rational: matrix is not square");
  const std::size_t n = m.rows();
  QMatrix a = m;
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(a(pivot, c), a(k, c));
      det = -det;
    }
    det *= a(k, k);
    const Rational inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) * inv;
      for (std::size_t c = k + 1; c < n; ++c) a(i, c) -= f * a(k, c);
    }
  }
  return det;
}

RankResult rank_exact(const QMatrix& m) {
  QMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = c; k < cols; ++k) std::swap(a(pivot, k), a(rank, k));
    }
    const Rational inv = a(rank, c).inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) * inv;
      for (std::size_t k = c; k < cols; ++k) a(i, k) -= f * a(rank, k);
    }
    ++rank;
  }
  return {rank, cols - rank};
}

}  // namespace discmat
