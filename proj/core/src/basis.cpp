#include "discmat/basis.hpp"

namespace discmat {

std::optional<std::size_t> CohBasis::index_of(const LaurentMono& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == m) return i;
  }
  return std::nullopt;
}

std::vector<Label> CohBasis::labels(const std::string& prefix) const {
  std::vector<Label> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(prefix.empty() ? e.str() : prefix + "|" + e.str());
  return out;
}

CohBasis h0_basis(int twist) {
  CohBasis b{CohKind::H0, twist, {}};
  for (int i = 0; i <= twist; ++i) b.elements.push_back({i, twist - i});
  return b;
}

CohBasis h1_basis(int twist) {
  CohBasis b{CohKind::H1, twist, {}};
  const int total = -twist;
  for (int a = total - 1; a >= 1; --a) b.elements.push_back({-a, -(total - a)});
  return b;
}

}  // namespace discmat
