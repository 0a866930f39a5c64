#include <gtest/gtest.h>

#include "discmat/analysis.hpp"
#include "oracles.hpp"

namespace discmat {
namespace {

using testing::Gen;

std::vector<Rational> coeffs(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long c : v) out.emplace_back(c);
  return out;
}

int repeated_roots(const RootProfile& p) {
  int count = 0;
  for (const auto& [r, m] : p.pairs) count += m >= 2 ? 1 : 0;
  return count;
}

int excess(const RootProfile& p) {
  int total = 0;
  for (const auto& [r, m] : p.pairs) total += m - 1;
  return total;
}

// Closure of the two-double-root locus: some pair of roots can each give up
// a double point, i.e. sum of floor(m/2) is at least two.
bool two_double_points(const RootProfile& p) {
  int pairs = 0;
  for (const auto& [r, m] : p.pairs) pairs += m / 2;
  return pairs >= 2;
}

TEST(RootProfile, ParseAndValidate) {
  const RootProfile p = RootProfile::parse("0^3,1^1");
  EXPECT_EQ(p.n(), 4);
  EXPECT_EQ(p.str(), "0^3,1^1");
  EXPECT_EQ(RootProfile::parse("-1/2^2, 3").str(), "-1/2^2,3^1");
  EXPECT_THROW(RootProfile::parse("1^2,1^1"), std::invalid_argument);
  EXPECT_THROW(RootProfile::parse("1^0,2^2"), std::invalid_argument);
  EXPECT_THROW(RootProfile::parse("5"), std::invalid_argument);
  EXPECT_THROW(RootProfile::parse("1^x"), std::invalid_argument);
  EXPECT_THROW(RootProfile::parse("1,,2"), std::invalid_argument);
}

TEST(PolyFromProfile, Examples) {
  EXPECT_EQ(poly_from_profile(RootProfile::parse("1^2,-1^2")), coeffs({1, 0, -2, 0, 1}));
  EXPECT_EQ(poly_from_profile(RootProfile::parse("0^3,1^1")), coeffs({1, -1, 0, 0, 0}));
  EXPECT_EQ(poly_from_profile(RootProfile::parse("2,3")), coeffs({1, -5, 6}));
}

TEST(PolyFromProfile, RootsVanish) {
  Gen g(1);
  for (int trial = 0; trial < 100; ++trial) {
    const RootProfile p = g.profile(g.uniform(2, 8), 3);
    const auto c = poly_from_profile(p);
    ASSERT_EQ(c.size(), static_cast<std::size_t>(p.n() + 1));
    for (const auto& [r, m] : p.pairs) {
      std::vector<Rational> d = c;
      for (int k = 0; k < m; ++k) {
        Rational value(0);
        for (const auto& x : d) value = value * r + x;
        ASSERT_TRUE(value.is_zero()) << p.str();
        d = derivative(d);
      }
    }
  }
}

TEST(Classify, Examples) {
  const Classification two_pairs = classify(poly_from_profile(RootProfile::parse("1^2,-1^2")));
  EXPECT_EQ(two_pairs.bezout_rank, 1);
  EXPECT_EQ(two_pairs.bezout_nullity, 2);
  EXPECT_EQ(two_pairs.swallowtail_nullity, 2);
  EXPECT_TRUE(two_pairs.multi_double_pair);

  const Classification triple = classify(poly_from_profile(RootProfile::parse("0^3,1^1")));
  EXPECT_EQ(triple.bezout_rank, 1);
  EXPECT_EQ(triple.bezout_nullity, 2);
  EXPECT_EQ(triple.swallowtail_nullity, 1);
  EXPECT_FALSE(triple.multi_double_pair);

  const Classification squarefree = classify(poly_from_profile(RootProfile::parse("1,2,3,4")));
  EXPECT_EQ(squarefree.bezout_nullity, 0);
  EXPECT_EQ(squarefree.swallowtail_nullity, 0);
  EXPECT_EQ(squarefree.distinct_roots_detected, 4);
}

TEST(Classify, NormalizesAndRejects) {
  const auto c = coeffs({3, 0, -6, 0, 3});
  EXPECT_EQ(classify(c), classify(coeffs({1, 0, -2, 0, 1})));
  EXPECT_THROW(classify(coeffs({0, 1, 1})), std::invalid_argument);
  EXPECT_THROW(classify(coeffs({1, 1})), std::invalid_argument);
  EXPECT_THROW(classify(coeffs({1, 0, 1}), classifier_bundles(4)), std::invalid_argument);
  const Classification quad = classify(coeffs({1, -2, 1}));
  EXPECT_EQ(quad.bezout_nullity, 1);
  EXPECT_EQ(quad.swallowtail_nullity, 0);
}

// Exact nullities seen on the monic minimal matrix; the lower bound >= 2 is
// what the classification relies on, these pin the observed values.
TEST(Classify, ObservedExactNullities) {
  const std::pair<const char*, int> cases[] = {
      {"1^2,-1^2", 2}, {"0^3,1^1", 1}, {"0^4", 2},       {"1,2,3,4", 0},
      {"0^5", 3},      {"0^2,1^3", 2}, {"0^3,1,2", 1},   {"0^2,1^2,2", 2}};
  for (const auto& [text, nullity] : cases) {
    EXPECT_EQ(classify(poly_from_profile(RootProfile::parse(text))).swallowtail_nullity, nullity) << text;
  }
}

TEST(Classify, RankDictionary) {
  Gen g(2718);
  for (int n = 3; n <= 6; ++n) {
    const ClassifierBundles bundles = classifier_bundles(n);
    for (int trial = 0; trial < 60; ++trial) {
      const RootProfile p = g.profile(n, 1 + trial % n);
      const Classification c = classify(poly_from_profile(p), bundles);
      ASSERT_EQ(c.distinct_roots_detected, static_cast<int>(p.pairs.size())) << p.str();
      ASSERT_EQ(c.bezout_nullity, excess(p)) << p.str();
      ASSERT_EQ(c.distinct_roots_detected, c.bezout_rank + 1);
      ASSERT_EQ(c.multiplicity_excess, c.bezout_nullity);
      ASSERT_EQ(c.multi_double_pair, c.swallowtail_nullity >= 2);
    }
  }
}

TEST(Classify, SwallowtailSeparation) {
  Gen g(1414);
  for (int n = 4; n <= 6; ++n) {
    const ClassifierBundles bundles = classifier_bundles(n);
    for (int trial = 0; trial < 80; ++trial) {
      const RootProfile p = g.profile(n, 1 + trial % (n - 1));
      const Classification c = classify(poly_from_profile(p), bundles);
      ASSERT_EQ(c.swallowtail_nullity >= 2, two_double_points(p)) << p.str();
      if (repeated_roots(p) >= 2) ASSERT_GE(c.swallowtail_nullity, 2) << p.str();
      if (repeated_roots(p) == 1 && excess(p) <= 2) ASSERT_LE(c.swallowtail_nullity, 1) << p.str();
    }
  }
}

TEST(Classify, TranslationInvariant) {
  Gen g(161);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = g.uniform(3, 6);
    const RootProfile p = g.profile(n, 3);
    RootProfile shifted = p;
    const Rational t = g.rational(5, 3);
    for (auto& [r, m] : shifted.pairs) r += t;
    ASSERT_EQ(classify(poly_from_profile(p)), classify(poly_from_profile(shifted))) << p.str() << " + " << t;
  }
}

TEST(DividedCoords, Examples) {
  EXPECT_EQ(to_divided(coeffs({1, 1, 1, 1, 1})).s, coeffs({4, 12, 24, 24}));
  const Rational b(3, 7), c(-2);
  EXPECT_EQ(to_divided({1, b, c}).s, (std::vector<Rational>{2 * b, 2 * c}));
  EXPECT_THROW(to_divided(coeffs({2, 1, 1})), std::invalid_argument);
}

TEST(DividedCoords, RoundTrip) {
  Gen g(88);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      auto a = g.point(n + 1);
      a[0] = Rational(1);
      ASSERT_EQ(from_divided(to_divided(a)), a);
      DividedCoords s{g.point(n)};
      ASSERT_EQ(to_divided(from_divided(s)), s);
    }
  }
}

// Passing to the monic derivative rescales s_i by ((n-i)/n)^2 and drops s_n.
TEST(DividedCoords, MonicDerivativeScaling) {
  Gen g(9);
  for (int n = 3; n <= 8; ++n) {
    auto a = g.point(n + 1);
    a[0] = Rational(1);
    auto d = derivative(a);
    const Rational lead = d.front();
    for (auto& x : d) x /= lead;
    const auto s = to_divided(a).s;
    const auto sd = to_divided(d).s;
    ASSERT_EQ(sd.size(), s.size() - 1);
    for (int i = 1; i < n; ++i) {
      const Rational r(n - i, n);
      EXPECT_EQ(sd[static_cast<std::size_t>(i - 1)], r * r * s[static_cast<std::size_t>(i - 1)]) << n << " " << i;
    }
  }
}

TEST(Givental, Examples) {
  const MultiPoly x = MultiPoly::variable(0, Var::x());
  EXPECT_EQ(givental_generator(coeffs({1, 0, 0}), 1), 2 * x);
  EXPECT_EQ(givental_generator(coeffs({1, 0, 0, 0}), 1), 3 * x * x);
  EXPECT_EQ(givental_generator(coeffs({1, 0, 0, 0}), 2), 2 * x.pow(3));
  EXPECT_THROW(givental_generator(coeffs({1, 0, 0}), 0), std::invalid_argument);
}

TEST(Givental, DerivativeRecoversIntegrand) {
  Gen g(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = g.uniform(2, 7);
    const int i = g.uniform(1, 4);
    auto a = g.point(n + 1);
    a[0] = Rational(1);
    const MultiPoly gen = givental_generator(a, i);
    MultiPoly fpp(0);
    const auto second = derivative(derivative(a));
    for (std::size_t k = 0; k < second.size(); ++k) {
      fpp += MultiPoly::monomial(0, Monomial::xy(static_cast<int>(second.size() - 1 - k), 0), second[k]);
    }
    Rational fact(1);
    for (int k = 2; k < i; ++k) fact *= Rational(k);
    const MultiPoly weight = MultiPoly::monomial(0, Monomial::xy(i - 1, 0), fact.inverse());
    ASSERT_EQ(differentiate(gen, Var::x()), fpp * weight);
    ASSERT_TRUE(gen.coefficient(Monomial()).is_zero());
  }
}

TEST(Probe, Reports) {
  const ProbeReport base = probe_higher_nullity(4, 0, 12, 42);
  EXPECT_EQ(base.samples.size(), 12U);
  for (const auto& [nullity, count] : base.histogram) EXPECT_GE(nullity, 2);

  const ProbeReport first = probe_higher_nullity(5, 1, 8, 42);
  int total = 0;
  for (const auto& [nullity, count] : first.histogram) total += count;
  EXPECT_EQ(total, 8);
  for (const auto& s : first.samples) EXPECT_EQ(s.coeffs.size(), 6U);
  EXPECT_EQ(probe_higher_nullity(5, 1, 8, 42).histogram, first.histogram);

  EXPECT_TRUE(probe_higher_nullity(5, 1, 0, 42).samples.empty());
  EXPECT_TRUE(probe_higher_nullity(5, 1, 0, 42).histogram.empty());
  EXPECT_THROW(probe_higher_nullity(4, 1, 3, 42), std::invalid_argument);
}

}  // namespace
}  // namespace discmat
