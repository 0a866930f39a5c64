#include "discmat/swallowtail.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "discmat/basis.hpp"
#include "discmat/cech.hpp"
#include "discmat/errors.hpp"
#include "discmat/linalg.hpp"

namespace discmat {

PolyMatrix assemble(int n) {
  if (n < 3 || n > kMaxDegree) throw std::invalid_argument("assemble: n = " + std::to_string(n) + " outside [3, 13]");
  const PolyMatrix d2 = partial2_matrix(n);
  const PolyMatrix d1 = d1_matrix(n);
  const PolyMatrix bottom = bezout_row(n, {0, n - 2});

  const std::size_t size = d2.rows() + 1;
  PolyMatrix m(size, size, n + 1);
  m.set_block(0, 0, d2);
  m.set_block(0, d2.cols(), d1);
  m.set_block(d2.rows(), d2.cols(), bottom);

  std::vector<Label> rows = d2.row_labels();
  rows.push_back("A|" + bottom.row_labels().front());
  std::vector<Label> cols;
  for (const auto& l : d2.col_labels()) cols.push_back("d2|" + l);
  for (const auto& l : d1.col_labels()) cols.push_back("d1|" + l);
  m.set_row_labels(std::move(rows));
  m.set_col_labels(std::move(cols));
  return m;
}

Rational ReductionLog::det_factor() const {
  Rational f(1);
  for (const auto& p : pivots) f *= (p.row + p.col) % 2 == 0 ? p.pivot : -p.pivot;
  return f;
}

Reduction minimize(const PolyMatrix& input, const std::optional<Assignment>& substitutions) {
  if (!input.is_square()) throw std::invalid_argument("minimize: matrix is not square");
  PolyMatrix m = substitutions ? specialize(input, *substitutions) : input;
  ReductionLog log;
  for (;;) {
    std::optional<PivotRecord> found;
    for (std::size_t c = 0; c < m.cols() && !found; ++c) {
      for (std::size_t r = 0; r < m.rows() && !found; ++r) {
        if (m(r, c).is_zero()) continue;
        if (auto v = m(r, c).as_constant()) found = PivotRecord{r, c, *v};
      }
    }
    if (!found) break;

    const auto [pr, pc, p] = *found;
    const Rational inv = p.inverse();
    PolyMatrix next = m.without(pr, pc);
    for (std::size_t i = 0, ni = 0; i < m.rows(); ++i) {
      if (i == pr) continue;
      if (!m(i, pc).is_zero()) {
        const MultiPoly factor = m(i, pc) * inv;
        for (std::size_t j = 0, nj = 0; j < m.cols(); ++j) {
          if (j == pc) continue;
          if (!m(pr, j).is_zero()) next(ni, nj) -= factor * m(pr, j);
          ++nj;
        }
      }
      ++ni;
    }
    log.pivots.push_back(*found);
    m = std::move(next);
  }
  return {std::move(m), std::move(log)};
}

SwallowtailPresentation present(int n) {
  SwallowtailPresentation s;
  s.n = n;
  s.full = assemble(n);
  auto first = minimize(s.full);
  auto second = minimize(first.matrix, Assignment{{Var::a(0), Rational(1)}});
  s.reduced = std::move(first.matrix);
  s.reduction_log = std::move(first.log);
  s.monic_minimal = std::move(second.matrix);
  s.monic_log = std::move(second.log);
  return s;
}

namespace {

DetRelation symbolic_relation(const PolyMatrix& m, int n, bool monic) {
  MultiPoly disc = discriminant_oracle(n);
  if (monic) disc = specialize(disc, {{Var::a(0), Rational(1)}});
  const MultiPoly det = det_fraction_free(m).with_nvars(n + 1);
  auto quotient = try_exact_div(det, disc);
  if (!quotient || quotient->is_zero()) {
    throw FormulaVerificationError("determinant is not a nonzero multiple of D_" + std::to_string(n));
  }
  const MultiPoly a0 = MultiPoly::variable(n + 1, Var::a(0));
  int e = 0;
  while (!quotient->is_constant()) {
    auto next = try_exact_div(*quotient, a0);
    if (!next) {
      throw FormulaVerificationError("det / D_" + std::to_string(n) + " = " + quotient->str() +
                                     " is not a constant times a power of a0");
    }
    quotient = std::move(next);
    ++e;
  }
  return {*quotient->as_constant(), e};
}

Rational random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 41) - 20;
  const long den = static_cast<long>(rng() % 9) + 1;
  return Rational(num, den);
}

DetRelation sampled_relation(const PolyMatrix& m, int n, const VerifyOptions& options, bool monic) {
  if (options.samples < 1) throw std::invalid_argument("sampled verification needs at least one sample");
  std::mt19937_64 rng(options.seed);
  std::vector<Rational> a0s;
  std::vector<Rational> ratios;
  const int max_attempts = 100 * options.samples + 1000;
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(ratios.size()) < options.samples; ++attempt) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(n + 1));
    for (auto& c : coeffs) c = random_rational(rng);
    if (monic) coeffs[0] = Rational(1);
    if (coeffs[0].is_zero()) continue;
    const Rational disc = discriminant_at(coeffs);
    if (disc.is_zero()) continue;
    const Rational det = det_rational(evaluate(m, coefficient_assignment(coeffs)));
    a0s.push_back(coeffs[0]);
    ratios.push_back(det / disc);
  }
  if (static_cast<int>(ratios.size()) < options.samples) {
    throw FormulaVerificationError("could not draw enough points off the discriminant");
  }
  if (ratios.front().is_zero()) throw FormulaVerificationError("determinant vanishes at a point off the discriminant");

  const int max_e = monic ? 0 : 2 * n;
  for (int e = 0; e <= max_e; ++e) {
    const Rational c = ratios[0] / a0s[0].pow(e);
    bool constant = true;
    for (std::size_t i = 1; i < ratios.size() && constant; ++i) constant = ratios[i] == c * a0s[i].pow(e);
    if (constant) return {c, e};
  }
  throw FormulaVerificationError("det / D_" + std::to_string(n) + " is not constant across samples");
}

}  // namespace

DetRelation verify_det_relation(const PolyMatrix& m, int n, const VerifyOptions& options, bool monic) {
  if (!m.is_square()) throw std::invalid_argument("verify_det_relation: matrix is not square");
  return options.mode == VerifyMode::symbolic ? symbolic_relation(m, n, monic) : sampled_relation(m, n, options, monic);
}

DetRelation verify_det(int n, const VerifyOptions& options) { return verify_det_relation(assemble(n), n, options); }

FormulaBundle make_bundle(FormulaKind kind, int n, const std::optional<VerifyOptions>& verify) {
  FormulaBundle b{kind, n, {}, std::nullopt};
  bool monic = false;
  switch (kind) {
    case FormulaKind::sylvester: {
      const UniversalForm form(n);
      b.matrix = sylvester_matrix(form.F(), form.Fx());
      b.det_relation = DetRelation{(n * (n - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1), 1};
      return b;
    }
    case FormulaKind::bezout:
      b.matrix = bezout_matrix(n);
      break;
    case FormulaKind::swallowtail_full:
      b.matrix = assemble(n);
      break;
    case FormulaKind::swallowtail_minimal:
      b.matrix = minimize(assemble(n)).matrix;
      break;
    case FormulaKind::swallowtail_monic:
      b.matrix = present(n).monic_minimal;
      monic = true;
      break;
  }
  if (verify) b.det_relation = verify_det_relation(b.matrix, n, *verify, monic);
  return b;
}

}  // namespace discmat
