#include <gtest/gtest.h>

#include "discmat/cech.hpp"
#include "discmat/errors.hpp"
#include "discmat/linalg.hpp"
#include "discmat/swallowtail.hpp"
#include "oracles.hpp"
#include "printed_n4.hpp"

namespace discmat {
namespace {


const Assignment kMonic{{Var::a(0), Rational(1)}};

TEST(Assemble, PrintedDegreeFour) {
  const PolyMatrix m = assemble(4);
  EXPECT_EQ(m.entries(), testing::printed_n4::swallowtail().entries());
  EXPECT_EQ(m.row_labels().back(), "A|y^2");
  EXPECT_EQ(m.col_labels()[4], "d1|x^-3*y^-1");
}

TEST(Assemble, CubicFromBuilders) {
  const PolyMatrix m = assemble(3);
  ASSERT_EQ(m.rows(), 4U);
  const PolyMatrix d2 = partial2_matrix(3), d1 = d1_matrix(3), row = bezout_row(3, {0, 1});
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      EXPECT_EQ(m(r, c), d2(r, c));
      EXPECT_EQ(m(r, c + 2), d1(r, c));
    }
  }
  EXPECT_TRUE(m(3, 0).is_zero());
  EXPECT_TRUE(m(3, 1).is_zero());
  EXPECT_EQ(m(3, 2), row(0, 0));
  EXPECT_EQ(m(3, 3), row(0, 1));
}

TEST(Assemble, BlockSizes) {
  const PolyMatrix m = assemble(6);
  ASSERT_EQ(m.rows(), 13U);
  ASSERT_EQ(m.cols(), 13U);
  const PolyMatrix bottom = bezout_row(6, {0, 4});
  for (std::size_t c = 0; c < 8; ++c) EXPECT_TRUE(m(12, c).is_zero());
  for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(m(12, 8 + c), bottom(0, c));
  EXPECT_EQ(partial2_matrix(6).rows(), 12U);
  EXPECT_EQ(d1_matrix(6).cols(), 5U);
  EXPECT_THROW(assemble(2), std::invalid_argument);
}

TEST(Minimize, TrivialCases) {
  const Reduction id = minimize(PolyMatrix::identity(4, 3));
  EXPECT_EQ(id.matrix.rows(), 0U);
  EXPECT_EQ(id.log.pivots.size(), 4U);
  EXPECT_EQ(id.log.det_factor(), Rational(1));

  const PolyMatrix p = partial2_matrix(4);
  PolyMatrix square(4, 4, 5);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) square(r, c) = p(r, c);
  }
  const Reduction none = minimize(square);
  EXPECT_EQ(none.matrix, square);
  EXPECT_TRUE(none.log.pivots.empty());
  EXPECT_THROW(minimize(p), std::invalid_argument);
}

TEST(Minimize, SignOfOffDiagonalPivot) {
  // [[0, 2], [3, a0]]: pivot 3 at (1, 0), det = -6.
  PolyMatrix m(2, 2, 1);
  m(0, 1) = MultiPoly::constant(1, 2);
  m(1, 0) = MultiPoly::constant(1, 3);
  m(1, 1) = MultiPoly::variable(1, Var::a(0));
  const Reduction r = minimize(m);
  ASSERT_EQ(r.log.pivots.size(), 2U);
  EXPECT_EQ(r.log.pivots[0], (PivotRecord{1, 0, Rational(3)}));
  EXPECT_EQ(r.log.det_factor() * det_fraction_free(r.matrix), det_fraction_free(m));
}

TEST(Minimize, PrintedCascadeDegreeFour) {
  const SwallowtailPresentation s = present(4);
  ASSERT_EQ(s.reduced.rows(), 4U);
  EXPECT_EQ(s.reduced.entries(), testing::printed_n4::minimal().entries());
  for (const auto& e : s.reduced.entries()) {
    if (!e.is_zero()) EXPECT_GE(e.min_a_degree(), 1);
  }
  ASSERT_EQ(s.monic_minimal.rows(), 2U);
  EXPECT_EQ(s.reduction_log.pivots.size(), 3U);
  EXPECT_EQ(s.monic_log.pivots.size(), 2U);

  // The gamma row agrees with the printed monic matrix exactly.
  const PolyMatrix printed = testing::printed_n4::monic_printed();
  EXPECT_EQ(s.monic_minimal(1, 0), printed(1, 0));
  EXPECT_EQ(s.monic_minimal(1, 1), printed(1, 1));

  auto a = [](int i) { return MultiPoly::variable(5, Var::a(i)); };
  EXPECT_EQ(s.monic_minimal(0, 0), Rational(9, 4) * a(1).pow(3) - 9 * a(1) * a(2) + 18 * a(3));
  EXPECT_EQ(s.monic_minimal(0, 1),
            Rational(3, 4) * a(1) * a(1) * a(2) + Rational(3, 2) * a(1) * a(3) - 3 * a(2) * a(2) + 12 * a(4));

  const MultiPoly d4 = specialize(discriminant_oracle(4), kMonic);
  const auto q = try_exact_div(det_fraction_free(s.monic_minimal), d4);
  ASSERT_TRUE(q && q->is_constant());
  EXPECT_EQ(*q->as_constant(), Rational(27));
}

TEST(Minimize, SizesAndPivotCounts) {
  for (int n = 3; n <= 8; ++n) {
    const SwallowtailPresentation s = present(n);
    EXPECT_EQ(s.full.rows(), static_cast<std::size_t>(3 * n - 5));
    EXPECT_EQ(s.reduced.rows(), static_cast<std::size_t>(2 * n - 4));
    EXPECT_EQ(s.reduced.cols(), static_cast<std::size_t>(2 * n - 4));
    EXPECT_EQ(s.monic_minimal.rows(), static_cast<std::size_t>(n - 2));
    EXPECT_EQ(s.reduction_log.pivots.size(), static_cast<std::size_t>(n - 1));
    EXPECT_EQ(s.monic_log.pivots.size(), static_cast<std::size_t>(n - 2));
    for (const auto* log : {&s.reduction_log, &s.monic_log}) {
      for (const auto& p : log->pivots) EXPECT_FALSE(p.pivot.is_zero());
    }
    for (const auto& e : s.monic_minimal.entries()) EXPECT_TRUE(e.is_zero() || !e.is_constant());
    if (n >= 4) EXPECT_LT(s.monic_minimal.rows(), bezout_matrix(n).rows());
  }
}

TEST(Minimize, PreservesDeterminant) {
  for (int n = 3; n <= 5; ++n) {
    const SwallowtailPresentation s = present(n);
    const MultiPoly full = det_fraction_free(s.full);
    const MultiPoly reduced = det_fraction_free(s.reduced);
    EXPECT_EQ(full, s.reduction_log.det_factor() * reduced) << "n = " << n;
    EXPECT_EQ(specialize(reduced, kMonic), s.monic_log.det_factor() * det_fraction_free(s.monic_minimal).with_nvars(n + 1))
        << "n = " << n;
  }
}

TEST(VerifyDet, SymbolicRelations) {
  EXPECT_EQ(verify_det(3, {}), (DetRelation{Rational(3), 0}));
  EXPECT_EQ(verify_det(4, {}), (DetRelation{Rational(-32), 0}));
}

TEST(VerifyDet, SampledAgreesWithSymbolic) {
  const VerifyOptions sampled{VerifyMode::sampled, 50, 42};
  EXPECT_EQ(verify_det(3, sampled), verify_det(3, {}));
  EXPECT_EQ(verify_det(4, sampled), verify_det(4, {}));
  EXPECT_EQ(verify_det(5, sampled), (DetRelation{Rational(-750), 0}));
  EXPECT_EQ(verify_det(6, sampled), (DetRelation{Rational(31104), 0}));
  EXPECT_EQ(verify_det(5, {VerifyMode::sampled, 60, 7}), verify_det(5, sampled));
}

TEST(VerifyDet, CubicMonicEntry) {
  const SwallowtailPresentation s = present(3);
  ASSERT_EQ(s.monic_minimal.rows(), 1U);
  const MultiPoly d3 = specialize(discriminant_oracle(3), kMonic);
  const auto q = try_exact_div(s.monic_minimal(0, 0).with_nvars(4), d3);
  ASSERT_TRUE(q && q->is_constant());
  EXPECT_FALSE(q->as_constant()->is_zero());
  EXPECT_EQ(verify_det_relation(s.monic_minimal, 3, {}, true).c, *q->as_constant());
}

TEST(VerifyDet, DetectsWrongFormulas) {
  PolyMatrix m = bezout_matrix(4);
  m(0, 0) += MultiPoly::variable(5, Var::a(2));
  EXPECT_THROW(verify_det_relation(m, 4, {}), FormulaVerificationError);
  EXPECT_THROW(verify_det_relation(m, 4, {VerifyMode::sampled, 20, 1}), FormulaVerificationError);

  // a0^2 * D_2 passes with e = 2.
  PolyMatrix scaled(1, 1, 3);
  scaled(0, 0) = MultiPoly::variable(3, Var::a(0)).pow(2) * discriminant_oracle(2) * Rational(5);
  EXPECT_EQ(verify_det_relation(scaled, 2, {}), (DetRelation{Rational(5), 2}));
  EXPECT_EQ(verify_det_relation(scaled, 2, {VerifyMode::sampled, 30, 3}), (DetRelation{Rational(5), 2}));
  EXPECT_THROW(verify_det_relation(scaled, 2, {VerifyMode::sampled, 0, 3}), std::invalid_argument);
}

TEST(Bundle, RelationsForEveryKind) {
  const VerifyOptions sym{};
  const FormulaBundle syl = make_bundle(FormulaKind::sylvester, 4);
  EXPECT_EQ(syl.det_relation, (DetRelation{Rational(1), 1}));
  EXPECT_EQ(verify_det_relation(syl.matrix, 4, sym), *syl.det_relation);
  EXPECT_EQ(make_bundle(FormulaKind::sylvester, 3).det_relation, (DetRelation{Rational(-1), 1}));

  EXPECT_EQ(make_bundle(FormulaKind::bezout, 4, sym).det_relation, (DetRelation{Rational(-16), 0}));
  EXPECT_EQ(make_bundle(FormulaKind::swallowtail_full, 4, sym).det_relation, (DetRelation{Rational(-32), 0}));
  const FormulaBundle minimal = make_bundle(FormulaKind::swallowtail_minimal, 4, sym);
  EXPECT_EQ(minimal.matrix.rows(), 4U);
  EXPECT_EQ(minimal.det_relation, (DetRelation{Rational(7776), 0}));
  EXPECT_EQ(make_bundle(FormulaKind::swallowtail_monic, 4, sym).det_relation, (DetRelation{Rational(27), 0}));
  EXPECT_FALSE(make_bundle(FormulaKind::bezout, 4).det_relation.has_value());
}

}  // namespace
}  // namespace discmat
