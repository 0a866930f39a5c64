#include "discmat/cech.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "discmat/formulas.hpp"

namespace discmat {

namespace {

void require_n(int n, int min_n, const char* who) {
  if (n < min_n || n > kMaxDegree) {
    throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) + " outside [" +
                                std::to_string(min_n) + ", " + std::to_string(kMaxDegree) + "]");
  }
}

LaurentMono xy_part(const Monomial& m) { return {m.exp[kSlotX], m.exp[kSlotY]}; }

Monomial strip_xy(Monomial m) {
  m.exp[kSlotX] = 0;
  m.exp[kSlotY] = 0;
  return m;
}

struct LaurentLess {
  bool operator()(const LaurentMono& a, const LaurentMono& b) const {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

// Column of coefficients of `p` in `tgt`, with the rows in basis order.
std::vector<MultiPoly> coordinates(const MultiPoly& p, const CohBasis& tgt, int nvars) {
  std::map<LaurentMono, std::size_t, LaurentLess> index;
  for (std::size_t i = 0; i < tgt.size(); ++i) index.emplace(tgt.elements[i], i);
  std::vector<std::vector<MultiPoly::Term>> rows(tgt.size());
  for (const auto& [m, c] : p.terms()) {
    const auto it = index.find(xy_part(m));
    if (it == index.end()) {
      throw std::logic_error("term " + m.str() + " has no basis element in the target space");
    }
    rows[it->second].emplace_back(strip_xy(m), c);
  }
  std::vector<MultiPoly> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(MultiPoly::from_terms(nvars, std::move(r)));
  return out;
}

MultiPoly laurent(int nvars, const LaurentMono& m, const Rational& c = Rational(1)) {
  return MultiPoly::monomial(nvars, m.monomial(), c);
}

}  // namespace

MultiPoly h1_truncate(const MultiPoly& p) {
  std::vector<MultiPoly::Term> kept;
  for (const auto& t : p.terms()) {
    if (t.first.exp[kSlotX] <= -1 && t.first.exp[kSlotY] <= -1) kept.push_back(t);
  }
  return MultiPoly::from_terms(p.nvars(), std::move(kept));
}

PolyMatrix mult_map(const MultiPoly& g, const CohBasis& src, const CohBasis& tgt) {
  if (src.kind != tgt.kind) throw std::invalid_argument("mult_map: source and target kinds differ");
  const int shift = tgt.twist - src.twist;
  for (const auto& [m, c] : g.terms()) {
    if (m.exp[kSlotX] + m.exp[kSlotY] != shift) {
      throw std::invalid_argument("mult_map: multiplier term " + m.str() + " does not have degree " +
                                  std::to_string(shift));
    }
  }
  const int nvars = g.nvars();
  PolyMatrix out(tgt.size(), src.size(), nvars);
  for (std::size_t c = 0; c < src.size(); ++c) {
    MultiPoly image = g * laurent(nvars, src.elements[c]);
    if (tgt.kind == CohKind::H1) image = h1_truncate(image);
    const auto column = coordinates(image, tgt, nvars);
    for (std::size_t r = 0; r < tgt.size(); ++r) out(r, c) = column[r];
  }
  out.set_row_labels(tgt.labels());
  out.set_col_labels(src.labels());
  return out;
}

CechMap generalized_sylvester(int n, int src_twist) {
  require_n(n, 3, "generalized_sylvester");
  const UniversalForm form(n);
  const CohBasis src = h1_basis(src_twist);
  const CohBasis tgt = h1_basis(src_twist + n - 2);
  const std::size_t k = tgt.size();

  PolyMatrix m(3 * k, src.size(), form.nvars());
  std::vector<Label> rows;
  const std::pair<const MultiPoly*, const char*> blocks[] = {
      {&form.Fxx(), "Fxx"}, {&form.Fxy(), "Fxy"}, {&form.Fyy(), "Fyy"}};
  for (std::size_t b = 0; b < 3; ++b) {
    m.set_block(b * k, 0, mult_map(*blocks[b].first, src, tgt));
    for (const auto& l : tgt.labels(blocks[b].second)) rows.push_back(l);
  }
  m.set_row_labels(std::move(rows));
  m.set_col_labels(src.labels());
  return {src, {tgt, tgt, tgt}, std::move(m)};
}

PolyMatrix partial2_matrix(int n) {
  require_n(n, 3, "partial2_matrix");
  return generalized_sylvester(n, 3 - 2 * n).matrix;
}

PolyMatrix d1_matrix(int n) {
  require_n(n, 3, "d1_matrix");
  const int nvars = n + 1;
  const CohBasis src = h1_basis(-n);
  const CohBasis tgt = h1_basis(1 - n);
  const std::size_t k = tgt.size();
  const Rational inv(1, n - 1);
  const MultiPoly x = MultiPoly::variable(nvars, Var::x());
  const MultiPoly y = MultiPoly::variable(nvars, Var::y());

  PolyMatrix m(3 * k, src.size(), nvars);
  for (std::size_t c = 0; c < src.size(); ++c) {
    const MultiPoly g = laurent(nvars, src.elements[c]);
    const MultiPoly gx = differentiate(g, Var::x());
    const MultiPoly xgx = x * gx * inv;
    const MultiPoly h[3] = {
        -(y * y * gx) * (inv * inv),
        y * (g + xgx) * inv,
        -(x * (Rational(2) * g + xgx)) * inv,
    };
    for (std::size_t b = 0; b < 3; ++b) {
      const auto column = coordinates(h1_truncate(h[b]), tgt, nvars);
      for (std::size_t r = 0; r < k; ++r) m(b * k + r, c) = column[r];
    }
  }
  std::vector<Label> rows;
  for (const char* name : {"Fxx", "Fxy", "Fyy"}) {
    for (const auto& l : tgt.labels(name)) rows.push_back(l);
  }
  m.set_row_labels(std::move(rows));
  m.set_col_labels(src.labels());
  return m;
}

PolyMatrix koszul_second_differential(int n, int twist) {
  require_n(n, 3, "koszul_second_differential");
  const UniversalForm form(n);
  const CohBasis src = h1_basis(twist);
  const CohBasis tgt = h1_basis(twist + n - 2);
  const MultiPoly zero(form.nvars());
  const MultiPoly* entries[3][3] = {{nullptr, &form.Fyy(), &form.Fxy()},
                                    {&form.Fyy(), nullptr, &form.Fxx()},
                                    {&form.Fxy(), &form.Fxx(), nullptr}};
  const int signs[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};

  PolyMatrix m(3 * tgt.size(), 3 * src.size(), form.nvars());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (entries[i][j] == nullptr) continue;
      const MultiPoly g = signs[i][j] > 0 ? *entries[i][j] : -*entries[i][j];
      m.set_block(i * tgt.size(), j * src.size(), mult_map(g, src, tgt));
    }
  }
  return m;
}

PolyMatrix a_via_cech(int n) {
  require_n(n, 2, "a_via_cech");
  const UniversalForm form(n);
  const int nvars = form.nvars();
  const CohBasis src = h1_basis(-n);
  const CohBasis tgt = h0_basis(n - 2);

  PolyMatrix out(tgt.size(), src.size(), nvars);
  for (std::size_t c = 0; c < src.size(); ++c) {
    const MultiPoly g = laurent(nvars, src.elements[c]);
    const MultiPoly u[2] = {form.Fy() * g, -(form.Fx() * g)};
    std::vector<MultiPoly::Term> on_uy[2];
    std::vector<MultiPoly::Term> on_ux[2];
    for (std::size_t k = 0; k < 2; ++k) {
      for (const auto& t : u[k].terms()) {
        const bool x_regular = t.first.exp[kSlotX] >= 0;
        const bool y_regular = t.first.exp[kSlotY] >= 0;
        if (x_regular == y_regular) {
          throw std::logic_error("a_via_cech: term " + t.first.str() + " does not split between the charts");
        }
        (x_regular ? on_uy[k] : on_ux[k]).push_back(t);
      }
    }
    auto apply_koszul = [&](std::vector<MultiPoly::Term>* parts) {
      return form.Fx() * MultiPoly::from_terms(nvars, parts[0]) + form.Fy() * MultiPoly::from_terms(nvars, parts[1]);
    };
    const MultiPoly section = apply_koszul(on_uy);
    if (section != -apply_koszul(on_ux)) throw std::logic_error("a_via_cech: chart sections disagree");
    const auto column = coordinates(section, tgt, nvars);
    for (std::size_t r = 0; r < tgt.size(); ++r) out(r, c) = column[r];
  }
  out.set_row_labels(tgt.labels());
  out.set_col_labels(src.labels());
  return out;
}

std::optional<Alignment> align(const PolyMatrix& source, const PolyMatrix& target) {
  if (!source.is_square() || source.rows() != target.rows() || source.cols() != target.cols()) return std::nullopt;
  const std::size_t k = source.rows();
  if (k > 8) return std::nullopt;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    for (int sign : {1, -1}) {
      bool ok = true;
      for (std::size_t r = 0; r < k && ok; ++r) {
        for (std::size_t c = 0; c < k && ok; ++c) {
          const MultiPoly& s = source(perm[r], perm[c]);
          ok = target(r, c) == (sign > 0 ? s : -s);
        }
      }
      if (ok) return Alignment{sign, perm};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace discmat
