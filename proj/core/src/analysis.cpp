#include "discmat/analysis.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "discmat/linalg.hpp"
#include "discmat/swallowtail.hpp"

namespace discmat {

int RootProfile::n() const {
  int total = 0;
  for (const auto& p : pairs) total += p.second;
  return total;
}

void RootProfile::validate() const {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].second < 1) throw std::invalid_argument("root profile: multiplicity must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (pairs[i].first == pairs[j].first) {
        throw std::invalid_argument("root profile: root " + pairs[i].first.str() + " listed twice");
      }
    }
  }
  if (n() < 2) throw std::invalid_argument("root profile: total degree must be at least 2");
  if (n() > kMaxDegree) throw std::invalid_argument("root profile: total degree above " + std::to_string(kMaxDegree));
}

RootProfile RootProfile::parse(std::string_view text) {
  RootProfile p;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw std::invalid_argument("root profile: empty entry");
    int mult = 1;
    const auto caret = item.rfind('^');
    if (caret != std::string_view::npos) {
      const std::string m(item.substr(caret + 1));
      std::size_t used = 0;
      try {
        mult = std::stoi(m, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != m.size()) throw std::invalid_argument("root profile: bad multiplicity '" + m + "'");
      item = item.substr(0, caret);
    }
    p.pairs.emplace_back(Rational::parse(std::string(item)), mult);
  }
  p.validate();
  return p;
}

std::string RootProfile::str() const {
  std::string out;
  for (const auto& [r, m] : pairs) {
    if (!out.empty()) out += ',';
    out += r.str() + "^" + std::to_string(m);
  }
  return out;
}

std::vector<Rational> poly_from_profile(const RootProfile& profile) {
  profile.validate();
  std::vector<Rational> c{Rational(1)};
  for (const auto& [r, m] : profile.pairs) {
    for (int k = 0; k < m; ++k) {
      c.emplace_back(0);
      for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= r * c[i - 1];
    }
  }
  return c;
}

std::vector<Rational> derivative(const std::vector<Rational>& coeffs) {
  if (coeffs.empty()) return {};
  const std::size_t n = coeffs.size() - 1;
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Rational(static_cast<long>(n - i)) * coeffs[i]);
  return out;
}

ClassifierBundles classifier_bundles(int n) {
  ClassifierBundles b{make_bundle(FormulaKind::bezout, n), std::nullopt};
  if (n >= 3) b.swallowtail_monic = make_bundle(FormulaKind::swallowtail_monic, n);
  return b;
}

Classification classify(const std::vector<Rational>& coeffs, const ClassifierBundles& bundles) {
  if (coeffs.size() < 3) throw std::invalid_argument("classify: need a polynomial of degree at least 2");
  if (coeffs.front().is_zero()) throw std::invalid_argument("classify: leading coefficient zero");
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (bundles.bezout.kind != FormulaKind::bezout || bundles.bezout.n != n) {
    throw std::invalid_argument("classify: Bezout bundle does not match degree " + std::to_string(n));
  }
  if (n >= 3 && (!bundles.swallowtail_monic || bundles.swallowtail_monic->kind != FormulaKind::swallowtail_monic ||
                 bundles.swallowtail_monic->n != n)) {
    throw std::invalid_argument("classify: monic swallowtail bundle does not match degree " + std::to_string(n));
  }

  std::vector<Rational> monic = coeffs;
  const Rational lead = coeffs.front();
  for (auto& c : monic) c /= lead;
  const Assignment point = coefficient_assignment(monic);

  Classification out;
  out.n = n;
  const RankResult bez = rank_exact(evaluate(bundles.bezout.matrix, point));
  out.bezout_rank = static_cast<int>(bez.rank);
  out.bezout_nullity = static_cast<int>(bez.nullity);
  if (bundles.swallowtail_monic) {
    out.swallowtail_nullity = static_cast<int>(rank_exact(evaluate(bundles.swallowtail_monic->matrix, point)).nullity);
  }
  out.distinct_roots_detected = out.bezout_rank + 1;
  out.multiplicity_excess = out.bezout_nullity;
  out.multi_double_pair = out.swallowtail_nullity >= 2;
  return out;
}

Classification classify(const std::vector<Rational>& coeffs) {
  if (coeffs.size() < 3) throw std::invalid_argument("classify: need a polynomial of degree at least 2");
  if (coeffs.front().is_zero()) throw std::invalid_argument("classify: leading coefficient zero");
  return classify(coeffs, classifier_bundles(static_cast<int>(coeffs.size()) - 1));
}

namespace {

Rational falling_factorial(int n, int i) {
  Rational f(1);
  for (int k = 0; k < i; ++k) f *= Rational(n - k);
  return f;
}

void require_monic(const std::vector<Rational>& coeffs, const char* who) {
  if (coeffs.empty() || !coeffs.front().is_one()) throw std::invalid_argument(std::string(who) + ": expects a0 = 1");
}

}  // namespace

DividedCoords to_divided(const std::vector<Rational>& coeffs) {
  require_monic(coeffs, "to_divided");
  const int n = static_cast<int>(coeffs.size()) - 1;
  DividedCoords d;
  for (int i = 1; i <= n; ++i) d.s.push_back(falling_factorial(n, i) * coeffs[static_cast<std::size_t>(i)]);
  return d;
}

std::vector<Rational> from_divided(const DividedCoords& d) {
  const int n = static_cast<int>(d.s.size());
  std::vector<Rational> a{Rational(1)};
  for (int i = 1; i <= n; ++i) a.push_back(d.s[static_cast<std::size_t>(i - 1)] / falling_factorial(n, i));
  return a;
}

MultiPoly givental_generator(const std::vector<Rational>& coeffs, int i) {
  if (i < 1) throw std::invalid_argument("givental_generator: i must be at least 1");
  const int n = static_cast<int>(coeffs.size()) - 1;
  Rational fact(1);
  for (int k = 2; k < i; ++k) fact *= Rational(k);
  std::vector<MultiPoly::Term> terms;
  for (int k = 0; k + 2 <= n; ++k) {
    const int d = n - k;
    // a_k d (d-1) t^(d-2) * t^(i-1) / (i-1)!, integrated from 0.
    const int power = d - 2 + i;
    const Rational c = coeffs[static_cast<std::size_t>(k)] * Rational(d * (d - 1)) / (fact * Rational(power));
    terms.emplace_back(Monomial::xy(power, 0), c);
  }
  return MultiPoly::from_terms(0, std::move(terms));
}

ProbeReport probe_higher_nullity(int n, int i, int trials, std::uint64_t seed) {
  if (i < 0) throw std::invalid_argument("probe_higher_nullity: i must be nonnegative");
  if (n < i + 4) throw std::invalid_argument("probe_higher_nullity: need n >= i + 4 to fit two (i+2)-fold roots");
  ProbeReport report{n, i, {}, {}};
  if (trials <= 0) return report;

  const ClassifierBundles bundles = classifier_bundles(n);
  std::mt19937_64 rng(seed);
  auto draw = [&] { return Rational(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 3) + 1); };
  const int simple = n - i - 4;
  for (int t = 0; t < trials; ++t) {
    RootProfile profile;
    while (static_cast<int>(profile.pairs.size()) < 2 + simple) {
      const Rational r = draw();
      const bool fresh = std::none_of(profile.pairs.begin(), profile.pairs.end(),
                                      [&](const auto& p) { return p.first == r; });
      if (fresh) profile.pairs.emplace_back(r, profile.pairs.size() < 2 ? i + 2 : 1);
    }
    std::vector<Rational> coeffs = poly_from_profile(profile);
    for (int k = 0; k < i; ++k) coeffs = derivative(coeffs);
    const Classification c = classify(coeffs, bundles);
    report.samples.push_back({profile, coeffs, c.swallowtail_nullity});
    ++report.histogram[c.swallowtail_nullity];
  }
  return report;
}

}  // namespace discmat
