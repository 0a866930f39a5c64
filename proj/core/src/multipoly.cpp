#include "discmat/multipoly.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "discmat/errors.hpp"

namespace discmat {

// ---------------------------------------------------------------- Var

Var Var::a(int i) {
  if (i < 0 || i >= kMaxCoefficientVars) {
    throw std::out_of_range("coefficient variable index out of range: " + std::to_string(i));
  }
  return Var(i);
}

std::string Var::name() const {
  if (slot_ == kSlotX) return "x";
  if (slot_ == kSlotY) return "y";
  return "a" + std::to_string(slot_);
}

// ---------------------------------------------------------------- Monomial

namespace {

std::int16_t checked_exponent(int e) {
  if (e > std::numeric_limits<std::int16_t>::max() || e < std::numeric_limits<std::int16_t>::min()) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return static_cast<std::int16_t>(e);
}

std::string slot_name(int slot) {
  if (slot == kSlotX) return "x";
  if (slot == kSlotY) return "y";
  return "a" + std::to_string(slot);
}

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed integer in '" + std::string(context) + "'");
  }
  return value;
}

}  // namespace

Monomial Monomial::of(Var v, int power) {
  Monomial m;
  m.exp[v.slot()] = checked_exponent(power);
  return m;
}

Monomial Monomial::xy(int px, int py) {
  Monomial m;
  m.exp[kSlotX] = checked_exponent(px);
  m.exp[kSlotY] = checked_exponent(py);
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

int Monomial::a_degree() const {
  int d = 0;
  for (int i = 0; i < kMaxCoefficientVars; ++i) d += exp[i];
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

bool Monomial::has_negative() const {
  return std::any_of(exp.begin(), exp.end(), [](auto e) { return e < 0; });
}

int Monomial::max_coefficient_index() const {
  for (int i = kMaxCoefficientVars - 1; i >= 0; --i) {
    if (exp[i] != 0) return i;
  }
  return -1;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kSlots; ++i) r.exp[i] = checked_exponent(exp[i] + o.exp[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kSlots; ++i) r.exp[i] = checked_exponent(exp[i] - o.exp[i]);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kSlots; ++i) {
    if (exp[i] > o.exp[i]) return false;
  }
  return true;
}

std::string Monomial::str() const {
  std::string out;
  for (int i = 0; i < kSlots; ++i) {
    if (exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += slot_name(i);
    if (exp[i] != 1) out += '^' + std::to_string(exp[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial Monomial::parse(std::string_view text) {
  Monomial m;
  if (text == "1") return m;
  if (text.empty()) throw std::invalid_argument("empty monomial");
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto star = text.find('*', start);
    const auto factor = text.substr(start, star == std::string_view::npos ? text.npos : star - start);
    const auto caret = factor.find('^');
    const auto name = factor.substr(0, caret);
    const int power = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), text);
    int slot = -1;
    if (name == "x") {
      slot = kSlotX;
    } else if (name == "y") {
      slot = kSlotY;
    } else if (name.size() >= 2 && name[0] == 'a') {
      slot = Var::a(parse_int(name.substr(1), text)).slot();
    } else {
      throw std::invalid_argument("unknown variable in monomial '" + std::string(text) + "'");
    }
    m.exp[slot] = checked_exponent(m.exp[slot] + power);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return m;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da > db;
  for (int i = 0; i < kSlots; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exp) {
    h ^= static_cast<std::uint16_t>(e);
    h *= 1099511628211ULL;
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const TriDegree& d) {
  return os << '(' << d.a << ", " << d.x << ", " << d.y << ')';
}

// ---------------------------------------------------------------- MultiPoly

namespace {

int merged_nvars(const MultiPoly& p, const MultiPoly& q) {
  if (p.nvars() == q.nvars() || q.nvars() == 0) return p.nvars();
  if (p.nvars() == 0) return q.nvars();
  throw VarcountMismatch("polynomials over " + std::to_string(p.nvars()) + " and " +
                         std::to_string(q.nvars()) + " coefficient variables");
}

void check_slots(int nvars, const Monomial& m) {
  if (m.max_coefficient_index() >= nvars) {
    throw VarcountMismatch("monomial " + m.str() + " uses a variable outside a0..a" +
                           std::to_string(nvars - 1));
  }
  for (int i = 0; i < kMaxCoefficientVars; ++i) {
    if (m.exp[i] < 0) throw std::invalid_argument("negative exponent on a coefficient variable");
  }
}

// Merges two canonical term lists; `sign` is +1 or -1 for the second operand.
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, int sign) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : -b[j].second);
      ++j;
    } else {
      Rational c = sign > 0 ? a[i].second + b[j].second : a[i].second - b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxCoefficientVars) {
    throw std::out_of_range("unsupported coefficient variable count " + std::to_string(nvars));
  }
}

MultiPoly MultiPoly::from_canonical(int nvars, std::vector<Term> terms) {
  MultiPoly p(nvars);
  p.terms_ = std::move(terms);
  return p;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, Var v) { return monomial(nvars, Monomial::of(v)); }

MultiPoly MultiPoly::monomial(int nvars, const Monomial& m, const Rational& c) {
  MultiPoly p(nvars);
  check_slots(nvars, m);
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
  MultiPoly p(nvars);
  for (const auto& t : terms) check_slots(nvars, t.first);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

std::optional<Rational> MultiPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().first.is_one()) return terms_.front().second;
  return std::nullopt;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return grlex_greater(t.first, key); });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

bool MultiPoly::has_laurent() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.has_negative(); });
}

bool MultiPoly::uses_xy() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.uses_xy(); });
}

int MultiPoly::min_a_degree() const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, t.first.a_degree());
  return d;
}

int MultiPoly::max_a_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.a_degree());
  return d;
}

MultiPoly MultiPoly::with_nvars(int nvars) const {
  MultiPoly p(nvars);
  for (const auto& t : terms_) check_slots(nvars, t.first);
  p.terms_ = terms_;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  nvars_ = merged_nvars(*this, o);
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  nvars_ = merged_nvars(*this, o);
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const int nvars = merged_nvars(a, b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(nvars);
  if (a.size() == 1 || b.size() == 1) {
    // Monomial times polynomial keeps the order; no re-sorting needed.
    const auto& mono = a.size() == 1 ? a.terms_.front() : b.terms_.front();
    const auto& poly = a.size() == 1 ? b : a;
    std::vector<MultiPoly::Term> out;
    out.reserve(poly.size());
    for (const auto& t : poly.terms_) out.emplace_back(t.first * mono.first, t.second * mono.second);
    return MultiPoly::from_canonical(nvars, std::move(out));
  }
  std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  mpq_class prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ta.second.raw().get_mpq_t(), tb.second.raw().get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ta.first * tb.first, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::vector<MultiPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.emplace_back(m, Rational(std::move(c)));
  }
  std::sort(out.begin(), out.end(),
            [](const MultiPoly::Term& x, const MultiPoly::Term& y) { return grlex_greater(x.first, y.first); });
  return MultiPoly::from_canonical(nvars, std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly MultiPoly::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  MultiPoly result = constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << '*';
      os << m.str();
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------- free operations

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, ArithOp op) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

namespace {

// Smallest x and y exponents present (capped at 0), used to shift Laurent
// polynomials into the polynomial ring.
std::pair<int, int> lowest_xy(const MultiPoly& p) {
  int mx = std::numeric_limits<int>::max();
  int my = std::numeric_limits<int>::max();
  for (const auto& t : p.terms()) {
    mx = std::min<int>(mx, t.first.exp[kSlotX]);
    my = std::min<int>(my, t.first.exp[kSlotY]);
  }
  return {mx, my};
}

}  // namespace

std::optional<MultiPoly> try_exact_div(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  const int nvars = merged_nvars(num, den);
  if (num.is_zero()) return MultiPoly(nvars);

  // Move the lowest x and y powers of both sides to zero. Lowest powers add
  // under multiplication, so the shifted quotient is an honest polynomial.
  const auto [nx, ny] = lowest_xy(num);
  const auto [dx, dy] = lowest_xy(den);
  const Monomial num_shift = Monomial::xy(-nx, -ny);
  const Monomial den_shift = Monomial::xy(-dx, -dy);
  const Monomial quot_shift = Monomial::xy(dx - nx, dy - ny);

  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& [m, c] : num.terms()) rem.emplace(m * num_shift, c);
  std::vector<MultiPoly::Term> divisor;
  divisor.reserve(den.size());
  for (const auto& [m, c] : den.terms()) divisor.emplace_back(m * den_shift, c);
  const Monomial lead = divisor.front().first;
  const Rational lead_inv = divisor.front().second.inverse();

  std::vector<MultiPoly::Term> quotient;
  while (!rem.empty()) {
    const auto top = rem.begin();
    if (!lead.divides(top->first)) return std::nullopt;
    const Monomial qm = top->first / lead;
    const Rational qc = top->second * lead_inv;
    for (const auto& [m, c] : divisor) {
      const Monomial key = m * qm;
      auto [it, inserted] = rem.try_emplace(key, -(c * qc));
      if (!inserted) {
        it->second -= c * qc;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.emplace_back(qm, qc);
  }
  for (auto& t : quotient) t.first = t.first / quot_shift;
  return MultiPoly::from_terms(nvars, std::move(quotient));
}

MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den) {
  auto q = try_exact_div(num, den);
  if (!q) throw InexactDivision("exact_div: nonzero remainder dividing by " + den.str());
  return *std::move(q);
}

MultiPoly differentiate(const MultiPoly& p, Var v) {
  std::vector<MultiPoly::Term> out;
  out.reserve(p.size());
  const int slot = v.slot();
  for (const auto& [m, c] : p.terms()) {
    if (m.exp[slot] == 0) continue;
    Monomial dm = m;
    dm.exp[slot] = static_cast<std::int16_t>(dm.exp[slot] - 1);
    out.emplace_back(dm, c * Rational(m.exp[slot]));
  }
  return MultiPoly::from_terms(p.nvars(), std::move(out));
}

MultiPoly specialize(const MultiPoly& p, const Assignment& assignment) {
  if (assignment.empty()) return p;
  std::vector<MultiPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    Rational coef = c;
    for (const auto& [var, value] : assignment) {
      const int e = m.exp[var.slot()];
      if (e == 0) continue;
      if (e < 0 && value.is_zero()) {
        throw std::domain_error("specialize: " + var.name() + " := 0 with a negative exponent");
      }
      coef *= value.pow(e);
      rest.exp[var.slot()] = 0;
    }
    out.emplace_back(rest, std::move(coef));
  }
  return MultiPoly::from_terms(p.nvars(), std::move(out));
}

Rational evaluate(const MultiPoly& p, const Assignment& assignment) {
  auto c = specialize(p, assignment).as_constant();
  if (!c) throw std::invalid_argument("evaluate: assignment leaves free variables in " + p.str());
  return *c;
}

Assignment coefficient_assignment(const std::vector<Rational>& coeffs) {
  Assignment a;
  for (std::size_t i = 0; i < coeffs.size(); ++i) a.emplace(Var::a(static_cast<int>(i)), coeffs[i]);
  return a;
}

std::optional<TriDegree> tri_degree(const Monomial& m, int n) {
  if (m.uses_xy()) return std::nullopt;
  TriDegree d;
  for (int i = 0; i < kMaxCoefficientVars; ++i) {
    const int e = m.exp[i];
    if (e == 0) continue;
    if (i > n) return std::nullopt;
    d.a += e;
    d.x += e * (n - i);
    d.y += e * i;
  }
  return d;
}

bool tri_degree_check(const MultiPoly& p, const TriDegree& expected, int n) {
  if (p.is_zero()) return false;
  for (const auto& t : p.terms()) {
    const auto d = tri_degree(t.first, n);
    if (!d || !(*d == expected)) return false;
  }
  return true;
}

}  // namespace discmat
