#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "discmat/formulas.hpp"
#include "discmat/multipoly.hpp"

namespace discmat {

/// Distinct rational roots with multiplicities; the degree is their sum.
struct RootProfile {
  std::vector<std::pair<Rational, int>> pairs;

  int n() const;
  /// Throws std::invalid_argument for repeated roots, nonpositive
  /// multiplicities or total degree below 2.
  void validate() const;
  /// "0^3,1^1" or "1/2^2,-3" (multiplicity defaults to 1).
  static RootProfile parse(std::string_view text);
  std::string str() const;
};

/// Coefficients (1, a1, ..., an) of prod (x - r)^m.
std::vector<Rational> poly_from_profile(const RootProfile& profile);

/// Coefficients of the derivative of sum a_i x^(n-i); the result has degree n - 1.
std::vector<Rational> derivative(const std::vector<Rational>& coeffs);

/// Matrices consumed by classify. The swallowtail matrix is absent for n = 2.
struct ClassifierBundles {
  FormulaBundle bezout;
  std::optional<FormulaBundle> swallowtail_monic;
};

ClassifierBundles classifier_bundles(int n);

struct Classification {
  int n = 0;
  int bezout_rank = 0;
  int bezout_nullity = 0;
  int swallowtail_nullity = 0;
  int distinct_roots_detected = 0;
  int multiplicity_excess = 0;
  bool multi_double_pair = false;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Ranks of the Bezout and monic swallowtail matrices at f / a0.
/// Throws std::invalid_argument when a0 = 0 or the degree does not match
/// the bundles.
Classification classify(const std::vector<Rational>& coeffs, const ClassifierBundles& bundles);
Classification classify(const std::vector<Rational>& coeffs);

/// s_i = n!/(n-i)! * a_i for i = 1..n.
struct DividedCoords {
  std::vector<Rational> s;
  friend bool operator==(const DividedCoords&, const DividedCoords&) = default;
};

/// Requires a monic coefficient vector (a0 = 1).
DividedCoords to_divided(const std::vector<Rational>& coeffs);
std::vector<Rational> from_divided(const DividedCoords& d);

/// integral from 0 to x of f''(t) t^(i-1)/(i-1)! dt, as a polynomial in x.
MultiPoly givental_generator(const std::vector<Rational>& coeffs, int i);

struct ProbeSample {
  RootProfile profile;
  std::vector<Rational> coeffs;
  int swallowtail_nullity = 0;
};

struct ProbeReport {
  int n = 0;
  int i = 0;
  std::vector<ProbeSample> samples;
  std::map<int, int> histogram;  // nullity -> count
};

/// Draws `trials` profiles of degree n + i with two (i+2)-fold roots and
/// simple remaining roots, differentiates i times and records the
/// swallowtail nullity. Requires n >= i + 4.
ProbeReport probe_higher_nullity(int n, int i, int trials, std::uint64_t seed);

}  // namespace discmat
