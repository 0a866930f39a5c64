#include "discmat/formulas.hpp"

#include <stdexcept>

#include "discmat/linalg.hpp"

namespace discmat {

namespace {

void check_degree(int n, int min_n) {
  if (n < min_n || n > kMaxDegree) {
    throw std::invalid_argument("degree n = " + std::to_string(n) + " outside [" + std::to_string(min_n) +
                                ", " + std::to_string(kMaxDegree) + "]");
  }
}

Rational sign_of_binomial(int n) { return (n * (n - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1); }

// Coefficients of p (with y := 1) by descending power of x.
std::vector<MultiPoly> x_coefficients(const MultiPoly& p) {
  const MultiPoly q = specialize(p, {{Var::y(), Rational(1)}});
  int degree = -1;
  for (const auto& [m, c] : q.terms()) {
    if (m.exp[kSlotX] < 0) throw std::invalid_argument("sylvester_matrix: negative power of x");
    degree = std::max<int>(degree, m.exp[kSlotX]);
  }
  std::vector<std::vector<MultiPoly::Term>> buckets(static_cast<std::size_t>(degree + 1));
  for (const auto& [m, c] : q.terms()) {
    Monomial rest = m;
    const int k = rest.exp[kSlotX];
    rest.exp[kSlotX] = 0;
    buckets[static_cast<std::size_t>(degree - k)].emplace_back(rest, c);
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(p.nvars(), std::move(b)));
  return out;
}

}  // namespace

UniversalForm::UniversalForm(int n) : n_(n) {
  check_degree(n, 2);
  std::vector<MultiPoly::Term> terms;
  for (int i = 0; i <= n; ++i) {
    Monomial m = Monomial::of(Var::a(i)) * Monomial::xy(n - i, i);
    terms.emplace_back(m, Rational(1));
  }
  partials_[0][0] = MultiPoly::from_terms(n + 1, std::move(terms));
  partials_[1][0] = differentiate(partials_[0][0], Var::x());
  partials_[0][1] = differentiate(partials_[0][0], Var::y());
  partials_[2][0] = differentiate(partials_[1][0], Var::x());
  partials_[1][1] = differentiate(partials_[1][0], Var::y());
  partials_[0][2] = differentiate(partials_[0][1], Var::y());
}

const MultiPoly& UniversalForm::partial(int i, int j) const {
  if (i < 0 || j < 0 || i + j > 2) throw std::out_of_range("UniversalForm::partial: order above two");
  return partials_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

UniversalForm universal_form(int n) { return UniversalForm(n); }

std::string to_string(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::sylvester: return "sylvester";
    case FormulaKind::bezout: return "bezout";
    case FormulaKind::swallowtail_full: return "swallowtail-full";
    case FormulaKind::swallowtail_minimal: return "swallowtail-minimal";
    case FormulaKind::swallowtail_monic: return "swallowtail-monic";
  }
  return "unknown";
}

std::optional<FormulaKind> parse_formula_kind(const std::string& text) {
  for (auto k : {FormulaKind::sylvester, FormulaKind::bezout, FormulaKind::swallowtail_full,
                 FormulaKind::swallowtail_minimal, FormulaKind::swallowtail_monic}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

PolyMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("sylvester_matrix: zero polynomial");
  const auto pc = x_coefficients(p);
  const auto qc = x_coefficients(q);
  const std::size_t dp = pc.size() - 1;
  const std::size_t dq = qc.size() - 1;
  if (dp < 1 || dq < 1) throw std::invalid_argument("sylvester_matrix: inputs must have degree >= 1 in x");

  const std::size_t size = dp + dq;
  const int nvars = std::max(p.nvars(), q.nvars());
  PolyMatrix s(size, size, nvars);
  std::vector<Label> rows;
  std::vector<Label> cols;
  for (std::size_t i = 0; i < dq; ++i) {
    for (std::size_t k = 0; k <= dp; ++k) s(i, i + k) = pc[k];
    rows.push_back("p*" + Monomial::xy(static_cast<int>(dq - 1 - i), 0).str());
  }
  for (std::size_t i = 0; i < dp; ++i) {
    for (std::size_t k = 0; k <= dq; ++k) s(dq + i, i + k) = qc[k];
    rows.push_back("q*" + Monomial::xy(static_cast<int>(dp - 1 - i), 0).str());
  }
  for (std::size_t c = 0; c < size; ++c) cols.push_back(Monomial::xy(static_cast<int>(size - 1 - c), 0).str());
  s.set_row_labels(std::move(rows));
  s.set_col_labels(std::move(cols));
  return s;
}

MultiPoly discriminant_oracle(int n) {
  const UniversalForm form(n);
  const MultiPoly res = det_fraction_free(sylvester_matrix(form.F(), form.Fx()));
  const MultiPoly a0 = MultiPoly::variable(n + 1, Var::a(0));
  return exact_div(res, a0) * sign_of_binomial(n);
}

Rational discriminant_at(const std::vector<Rational>& coeffs) {
  if (coeffs.size() < 3) throw std::invalid_argument("discriminant_at: need degree >= 2");
  if (coeffs.front().is_zero()) throw std::invalid_argument("discriminant_at: leading coefficient is zero");
  const std::size_t n = coeffs.size() - 1;
  const std::size_t size = 2 * n - 1;
  QMatrix s(size, size);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = 0; k <= n; ++k) s(i, i + k) = coeffs[k];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) s(n - 1 + i, i + k) = Rational(static_cast<long>(n - k)) * coeffs[k];
  }
  return det_rational(s) / coeffs.front() * sign_of_binomial(static_cast<int>(n));
}

PolyMatrix bezout_coefficients(int n) {
  check_degree(n, 2);
  const int nvars = n + 1;
  // u(t) = f_x(t, 1), v(t) = f_y(t, 1); x stands for t0 and y for t1.
  auto univariate = [&](bool derivative_in_x, Var t) {
    std::vector<MultiPoly::Term> terms;
    for (int i = 0; i <= n; ++i) {
      const int factor = derivative_in_x ? n - i : i;
      const int power = derivative_in_x ? n - 1 - i : n - i;
      if (factor == 0) continue;
      terms.emplace_back(Monomial::of(Var::a(i)) * Monomial::of(t, power), Rational(factor));
    }
    return MultiPoly::from_terms(nvars, std::move(terms));
  };
  const MultiPoly u0 = univariate(true, Var::x());
  const MultiPoly v0 = univariate(false, Var::x());
  const MultiPoly u1 = univariate(true, Var::y());
  const MultiPoly v1 = univariate(false, Var::y());
  const MultiPoly diff = MultiPoly::variable(nvars, Var::x()) - MultiPoly::variable(nvars, Var::y());
  const MultiPoly bez = exact_div(u0 * v1 - v0 * u1, diff);

  const std::size_t k = static_cast<std::size_t>(n - 1);
  PolyMatrix b(k, k, nvars);
  std::vector<std::vector<MultiPoly::Term>> cells(k * k);
  for (const auto& [m, c] : bez.terms()) {
    const auto i = static_cast<std::size_t>(m.exp[kSlotX]);
    const auto j = static_cast<std::size_t>(m.exp[kSlotY]);
    Monomial rest = m;
    rest.exp[kSlotX] = 0;
    rest.exp[kSlotY] = 0;
    cells[i * k + j].emplace_back(rest, c);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) b(i, j) = MultiPoly::from_terms(nvars, std::move(cells[i * k + j]));
  }
  return b;
}

PolyMatrix bezout_matrix(int n) {
  const PolyMatrix raw = bezout_coefficients(n);
  const std::size_t k = raw.rows();
  PolyMatrix out(k, k, n + 1);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) out(r, c) = -raw(r, k - 1 - c);
  }
  out.set_row_labels(h0_basis(n - 2).labels());
  out.set_col_labels(h1_basis(-n).labels());
  return out;
}

PolyMatrix bezout_row(int n, const LaurentMono& label) {
  const auto index = h0_basis(n - 2).index_of(label);
  if (!index) {
    throw std::invalid_argument("bezout_row: " + label.str() + " is not a row label of the degree " +
                                std::to_string(n) + " Bezout matrix");
  }
  return bezout_matrix(n).row(*index);
}

}  // namespace discmat
