#include "zagier/exact/multi_poly.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace zagier {

VariableTable& VariableTable::global() {
  static VariableTable table;
  return table;
}

VarId VariableTable::intern(std::string_view name) {
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<VarId>(i);
  if (names_.size() >= kMaxVars) throw std::length_error("too many distinct variables (max 16)");
  names_.emplace_back(name);
  return static_cast<VarId>(names_.size() - 1);
}

std::optional<VarId> VariableTable::find(std::string_view name) const {
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<VarId>(i);
  return std::nullopt;
}

std::string VariableTable::name(VarId id) const {
  std::lock_guard lock(mutex_);
  if (id < names_.size()) return names_[id];
  return "x" + std::to_string(id);
}

std::size_t VariableTable::size() const {
  std::lock_guard lock(mutex_);
  return names_.size();
}

// ---------------------------------------------------------------------------

Monomial Monomial::var(VarId v, unsigned power) {
  if (power > 255) throw std::overflow_error("exponent overflow");
  Monomial m;
  m.exp[v] = static_cast<std::uint8_t>(power);
  m.degree = static_cast<std::uint16_t>(power);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned{exp[i]} + other.exp[i];
    if (e > 255) throw std::overflow_error("exponent overflow");
    m.exp[i] = static_cast<std::uint8_t>(e);
  }
  m.degree = static_cast<std::uint16_t>(degree + other.degree);
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint8_t>(exp[i] - other.exp[i]);
  m.degree = static_cast<std::uint16_t>(degree - other.degree);
  return m;
}

std::uint32_t Monomial::support() const {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] != 0) s |= 1U << i;
  return s;
}

bool monomial_greater(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  return std::memcmp(a.exp.data(), b.exp.data(), kMaxVars) > 0;
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(BigRational c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, std::move(c));
}

MultiPoly MultiPoly::variable(VarId v) { return monomial(Monomial::var(v), BigRational(1)); }

MultiPoly MultiPoly::variable(std::string_view name) { return variable(VariableTable::global().intern(name)); }

MultiPoly MultiPoly::monomial(const Monomial& m, BigRational c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return monomial_greater(a.first, b.first); });
  MultiPoly p;
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

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.degree == 0);
}

BigRational MultiPoly::constant_value() const {
  if (!terms_.empty() && terms_.back().first.degree == 0) return terms_.back().second;
  return BigRational(0);
}

bool MultiPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_integer(); });
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree; }

unsigned MultiPoly::degree(VarId v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.first.exp[v]);
  return d;
}

std::uint32_t MultiPoly::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.first.support();
  return s;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <typename Combine>
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, Combine combine) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && monomial_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || monomial_greater(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, combine(BigRational(0), b[j].second));
      ++j;
    } else {
      BigRational c = combine(a[i].second, b[j].second);
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, [](const BigRational& x, const BigRational& y) { return x + y; });
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, [](const BigRational& x, const BigRational& y) { return x - y; });
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.size() == 1) return a.mul_term(b.terms_.front().first, b.terms_.front().second);
  if (a.size() == 1) return b.mul_term(a.terms_.front().first, a.terms_.front().second);
  std::vector<MultiPoly::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  return MultiPoly::from_terms(std::move(prod));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly MultiPoly::scaled(const BigRational& c) const {
  if (c.is_zero()) return {};
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const BigRational& c) const {
  if (c.is_zero()) return {};
  MultiPoly r;
  r.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves graded-lex order
  for (const auto& [mt, ct] : terms_) r.terms_.emplace_back(mt * m, ct * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base(*this);
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
  if (is_zero()) return MultiPoly{};
  if (divisor.is_constant()) return scaled(divisor.leading_coefficient().inverse());
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (degree(static_cast<VarId>(v)) < divisor.degree(static_cast<VarId>(v))) return std::nullopt;
  }
  const auto& [lm, lc] = divisor.leading_term();
  const BigRational lc_inv = lc.inverse();
  MultiPoly rem(*this);
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lm.divides(rm)) return std::nullopt;
    Monomial qm = rm / lm;
    BigRational qc = rc * lc_inv;
    rem -= divisor.mul_term(qm, qc);
    quotient.emplace_back(qm, std::move(qc));
  }
  MultiPoly q;
  q.terms_ = std::move(quotient);  // generated in descending order
  return q;
}

BigRational MultiPoly::content() const {
  if (terms_.empty()) return BigRational(0);
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& t : terms_) {
    const mpz_class n = t.second.numerator();
    const mpz_class d = t.second.denominator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return BigRational(g, l);
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return {};
  BigRational c = content();
  if (leading_coefficient().sign() < 0) c = -c;
  if (c.is_one()) return *this;
  return scaled(c.inverse());
}

BigRational MultiPoly::eval(const Assignment& values) const {
  BigRational sum(0);
  for (const auto& [m, c] : terms_) {
    BigRational term = c;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (m.exp[v] == 0) continue;
      auto it = values.find(static_cast<VarId>(v));
      if (it == values.end())
        throw std::invalid_argument("eval: unassigned variable " + VariableTable::global().name(static_cast<VarId>(v)));
      for (unsigned k = 0; k < m.exp[v]; ++k) term *= it->second;
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::eval_var(VarId v, const BigRational& value) const {
  std::vector<BigRational> powers{BigRational(1)};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exp[v];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial r = m;
    r.exp[v] = 0;
    r.degree = static_cast<std::uint16_t>(m.degree - e);
    out.emplace_back(r, c * powers[e]);
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::substitute(VarId v, const MultiPoly& value) const {
  std::vector<MultiPoly> powers{MultiPoly(1)};
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exp[v];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial r = m;
    r.exp[v] = 0;
    r.degree = static_cast<std::uint16_t>(m.degree - e);
    out += powers[e].mul_term(r, c);
  }
  return out;
}

std::map<unsigned, MultiPoly> MultiPoly::coefficients_in(VarId v) const {
  std::map<unsigned, std::vector<Term>> buckets;
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    const unsigned e = m.exp[v];
    r.exp[v] = 0;
    r.degree = static_cast<std::uint16_t>(m.degree - e);
    buckets[e].emplace_back(r, c);
  }
  std::map<unsigned, MultiPoly> out;
  for (auto& [e, ts] : buckets) out.emplace(e, from_terms(std::move(ts)));
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigRational mag = c.abs();
    if (first) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (m.exp[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += VariableTable::global().name(static_cast<VarId>(v));
      if (m.exp[v] > 1) mono += "^" + std::to_string(m.exp[v]);
    }
    if (mono.empty()) {
      s += mag.str();
    } else if (mag.is_one()) {
      s += mono;
    } else {
      s += mag.str() + "*" + mono;
    }
  }
  return s;
}

std::size_t MultiPoly::hash() const noexcept {
  std::size_t h = 0x84222325cbf29ce4ULL;
  for (const auto& [m, c] : terms_) {
    for (std::size_t v = 0; v < kMaxVars; ++v) h = (h ^ m.exp[v]) * 0x100000001b3ULL;
    h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool poly_less(const MultiPoly& a, const MultiPoly& b) {
  const bool ac = a.is_constant();
  const bool bc = b.is_constant();
  if (ac != bc) return ac;
  if (ac) return a.constant_value() < b.constant_value();
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    if (!(ta[i].first == tb[i].first)) return monomial_greater(ta[i].first, tb[i].first);
    if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
  }
  return ta.size() < tb.size();
}

}  // namespace zagier
