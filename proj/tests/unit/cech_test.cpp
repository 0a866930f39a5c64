#include <gtest/gtest.h>

#include "discmat/cech.hpp"
#include "discmat/formulas.hpp"
#include "oracles.hpp"
#include "printed_n4.hpp"

namespace discmat {
namespace {

using testing::Gen;

MultiPoly laurent(int x, int y, Rational c = Rational(1), int nvars = 0) {
  return MultiPoly::monomial(nvars, Monomial::xy(x, y), c);
}

TEST(CohBasis, Ordering) {
  const CohBasis h1 = h1_basis(-5);
  EXPECT_EQ(h1.kind, CohKind::H1);
  EXPECT_EQ(h1.labels(), (std::vector<Label>{"x^-4*y^-1", "x^-3*y^-2", "x^-2*y^-3", "x^-1*y^-4"}));
  EXPECT_EQ(h0_basis(2).labels(), (std::vector<Label>{"y^2", "x*y", "x^2"}));
  EXPECT_EQ(h1_basis(-4).labels("Fxx").front(), "Fxx|x^-3*y^-1");
  EXPECT_EQ(h1.index_of({-2, -3}), 2U);
  EXPECT_FALSE(h1.index_of({-2, -2}).has_value());
}

TEST(CohBasis, Cardinalities) {
  for (int d = -12; d <= 12; ++d) {
    EXPECT_EQ(h0_basis(d).size(), d >= 0 ? static_cast<std::size_t>(d + 1) : 0U) << d;
    EXPECT_EQ(h1_basis(d).size(), d <= -2 ? static_cast<std::size_t>(-d - 1) : 0U) << d;
    for (const auto& m : h1_basis(d).elements) {
      EXPECT_EQ(m.degree(), d);
      EXPECT_LE(m.x, -1);
      EXPECT_LE(m.y, -1);
    }
  }
}

TEST(H1Truncate, Examples) {
  const MultiPoly p = laurent(-3, 0, Rational(2, 9)) + laurent(-2, -1, Rational(1, 9));
  EXPECT_EQ(h1_truncate(p), laurent(-2, -1, Rational(1, 9)));
  EXPECT_EQ(h1_truncate(laurent(-1, -1)), laurent(-1, -1));
  EXPECT_TRUE(h1_truncate(laurent(2, 3)).is_zero());
}

TEST(MultMap, PrintedBlocks) {
  const UniversalForm f(4);
  const PolyMatrix fxx = mult_map(f.Fxx(), h1_basis(-5), h1_basis(-3));
  const PolyMatrix fyy = mult_map(f.Fyy(), h1_basis(-5), h1_basis(-3));
  const PolyMatrix printed = testing::printed_n4::partial2();
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      EXPECT_EQ(fxx(r, c), printed(r, c));
      EXPECT_EQ(fyy(r, c), printed(r + 4, c));
    }
  }
}

TEST(MultMap, IdentityAndErrors) {
  for (int d : {-2, -5, -9}) {
    const CohBasis b = h1_basis(d);
    EXPECT_EQ(mult_map(MultiPoly::constant(0, 1), b, b).entries(), PolyMatrix::identity(b.size(), 0).entries());
  }
  const UniversalForm f(4);
  EXPECT_THROW(mult_map(f.Fxx(), h1_basis(-5), h1_basis(-4)), std::invalid_argument);
  EXPECT_THROW(mult_map(f.Fxx(), h0_basis(1), h1_basis(-3)), std::invalid_argument);
  // H0 targets are read off without truncation.
  const PolyMatrix h0 = mult_map(f.Fxx(), h0_basis(0), h0_basis(2));
  EXPECT_EQ(h0(2, 0), 12 * MultiPoly::variable(5, Var::a(0)));
}

// Truncating before multiplying must not change the class of the product.
TEST(MultMap, TruncationCommutesWithMultiplication) {
  Gen g(19);
  for (int n = 3; n <= 6; ++n) {
    const UniversalForm f(n);
    for (const MultiPoly* h : {&f.Fxx(), &f.Fxy(), &f.Fyy(), &f.F()}) {
      for (int trial = 0; trial < 20; ++trial) {
        const int d = -g.uniform(2, 10);
        MultiPoly v(n + 1);
        for (int t = 0; t < 4; ++t) {
          const int px = g.uniform(d - 4, 4);
          v += laurent(px, d - px, g.rational(), n + 1);
        }
        ASSERT_EQ(h1_truncate(*h * h1_truncate(v)), h1_truncate(*h * v)) << "n = " << n;
      }
    }
  }
}

TEST(Partial2, PrintedDegreeFour) {
  const PolyMatrix m = partial2_matrix(4);
  EXPECT_EQ(m.entries(), testing::printed_n4::partial2().entries());
  EXPECT_EQ(m.row_labels().front(), "Fxx|x^-2*y^-1");
  EXPECT_EQ(m.row_labels().back(), "Fyy|x^-1*y^-2");
  EXPECT_EQ(m.col_labels().front(), "x^-4*y^-1");
}

TEST(Partial2, Cubic) {
  const PolyMatrix m = partial2_matrix(3);
  ASSERT_EQ(m.rows(), 3U);
  ASSERT_EQ(m.cols(), 2U);
  auto a = [](int i) { return MultiPoly::variable(4, Var::a(i)); };
  // F_xx = 6a0x + 2a1y, F_xy = 2a1x + 2a2y, F_yy = 2a2x + 6a3y.
  EXPECT_EQ(m.entries(), (std::vector<MultiPoly>{6 * a(0), 2 * a(1), 2 * a(1), 2 * a(2), 2 * a(2), 6 * a(3)}));
}

TEST(Partial2, LinearAndHomogeneous) {
  for (int n = 3; n <= 7; ++n) {
    const PolyMatrix m = partial2_matrix(n);
    ASSERT_EQ(m.rows(), static_cast<std::size_t>(3 * (n - 2)));
    ASSERT_EQ(m.cols(), static_cast<std::size_t>(2 * n - 4));
    for (const auto& e : m.entries()) {
      if (e.is_zero()) continue;
      ASSERT_EQ(e.size(), 1U);
      EXPECT_EQ(e.leading_term().first.a_degree(), 1);
    }
  }
  EXPECT_THROW(partial2_matrix(2), std::invalid_argument);
}

TEST(D1, PrintedDegreeFour) {
  const PolyMatrix m = d1_matrix(4);
  EXPECT_EQ(m.entries(), testing::printed_n4::d1().entries());
  // Column of x^-3*y^-1: only the F_yy block survives.
  for (std::size_t r = 0; r < 6; ++r) EXPECT_EQ(m(r, 0).is_zero(), r != 4);
  EXPECT_EQ(m(4, 0), MultiPoly::constant(5, Rational(-1, 3)));
}

TEST(D1, ConstantEntries) {
  for (int n = 3; n <= 8; ++n) {
    const PolyMatrix m = d1_matrix(n);
    ASSERT_EQ(m.rows(), static_cast<std::size_t>(3 * (n - 2)));
    ASSERT_EQ(m.cols(), static_cast<std::size_t>(n - 1));
    for (const auto& e : m.entries()) EXPECT_TRUE(e.is_zero() || e.is_constant());
  }
  EXPECT_THROW(d1_matrix(2), std::invalid_argument);
}

// The lifting formula evaluated by hand for g = x^-2*y^-2, n = 4, before truncation.
TEST(D1, HandComputedLift) {
  const MultiPoly g = laurent(-2, -2);
  const MultiPoly gx = differentiate(g, Var::x());
  const MultiPoly x = MultiPoly::variable(0, Var::x()), y = MultiPoly::variable(0, Var::y());
  const MultiPoly h1 = -(y * y * gx) * Rational(1, 9);
  const MultiPoly h2 = y * (g + x * gx * Rational(1, 3)) * Rational(1, 3);
  const MultiPoly h3 = -(x * (2 * g + x * gx * Rational(1, 3))) * Rational(1, 3);
  EXPECT_EQ(h1, laurent(-3, 0, Rational(2, 9)));
  EXPECT_EQ(h2, laurent(-2, -1, Rational(1, 9)));
  EXPECT_EQ(h3, laurent(-1, -2, Rational(-4, 9)));
}

TEST(Koszul, SecondDifferentialComposesToZero) {
  for (int n = 3; n <= 5; ++n) {
    for (int twist = 2 - 2 * n; twist >= -4 * n; --twist) {
      const PolyMatrix first = generalized_sylvester(n, twist).matrix;
      const PolyMatrix second = koszul_second_differential(n, twist + n - 2);
      ASSERT_EQ(second.cols(), first.rows());
      const PolyMatrix product = second * first;
      for (const auto& e : product.entries()) ASSERT_TRUE(e.is_zero()) << "n = " << n << " twist = " << twist;
      EXPECT_GT(second.rows(), 0U);
    }
  }
}

TEST(Koszul, AntisymmetricBlocks) {
  const PolyMatrix k = koszul_second_differential(4, -6);
  const std::size_t s = h1_basis(-6).size();
  const std::size_t t = h1_basis(-4).size();
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t r = 0; r < t; ++r) {
      for (std::size_t c = 0; c < s; ++c) EXPECT_TRUE(k(b * t + r, b * s + c).is_zero());
    }
  }
  const UniversalForm f(4);
  EXPECT_EQ(k(0, s), mult_map(f.Fyy(), h1_basis(-6), h1_basis(-4))(0, 0));
  EXPECT_EQ(k(t, 0), -mult_map(f.Fyy(), h1_basis(-6), h1_basis(-4))(0, 0));
}

TEST(ACech, MatchesBezout) {
  for (int n = 2; n <= 6; ++n) {
    const auto alignment = align(a_via_cech(n), bezout_matrix(n));
    ASSERT_TRUE(alignment.has_value()) << "n = " << n;
    EXPECT_EQ(alignment->sign, 1);
    std::vector<std::size_t> identity(static_cast<std::size_t>(n - 1));
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
    EXPECT_EQ(alignment->permutation, identity);
  }
}

TEST(ACech, Quadratic) {
  const MultiPoly a0 = MultiPoly::variable(3, Var::a(0)), a1 = MultiPoly::variable(3, Var::a(1)),
                  a2 = MultiPoly::variable(3, Var::a(2));
  const PolyMatrix m = a_via_cech(2);
  ASSERT_EQ(m.rows(), 1U);
  EXPECT_EQ(m(0, 0), -(4 * a0 * a2 - a1 * a1));
  EXPECT_EQ(m.entries(), a_via_cech(2).entries());
  EXPECT_THROW(a_via_cech(1), std::invalid_argument);
}

TEST(Align, FindsSignAndPermutation) {
  const PolyMatrix b = bezout_matrix(4);
  PolyMatrix shuffled(3, 3, 5);
  const std::vector<std::size_t> perm = {2, 0, 1};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) shuffled(perm[r], perm[c]) = -b(r, c);
  }
  const auto al = align(shuffled, b);
  ASSERT_TRUE(al.has_value());
  EXPECT_EQ(al->sign, -1);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(b(r, c), -shuffled(al->permutation[r], al->permutation[c]));
  }
  EXPECT_FALSE(align(partial2_matrix(4), b).has_value());
}

}  // namespace
}  // namespace discmat
