#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zagier/exact/big_rational.hpp"

namespace zagier {

inline constexpr std::size_t kMaxVars = 16;

using VarId = std::uint8_t;

// Process-wide, append-only table of variable names. Variable order is the
// order of first registration and is what graded-lex compares on.
class VariableTable {
 public:
  static VariableTable& global();

  VarId intern(std::string_view name);
  [[nodiscard]] std::optional<VarId> find(std::string_view name) const;
  [[nodiscard]] std::string name(VarId id) const;
  [[nodiscard]] std::size_t size() const;

 private:
  VariableTable() = default;
  mutable std::mutex mutex_;
  std::vector<std::string> names_;
};

// Exponent vector with cached total degree. Ordering is graded
// lexicographic: higher total degree first, ties broken by the exponent of
// the lowest-numbered variable.
struct Monomial {
  std::uint16_t degree = 0;
  std::array<std::uint8_t, kMaxVars> exp{};

  static Monomial var(VarId v, unsigned power = 1);

  [[nodiscard]] bool divides(const Monomial& other) const;
  [[nodiscard]] Monomial operator*(const Monomial& other) const;
  [[nodiscard]] Monomial operator/(const Monomial& other) const;  // requires divides
  [[nodiscard]] std::uint32_t support() const;                    // bitmask of variables

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// true iff a comes strictly before b in descending graded-lex order
bool monomial_greater(const Monomial& a, const Monomial& b);

using Assignment = std::map<VarId, BigRational>;

// Sparse multivariate polynomial over Q. Terms are kept strictly descending
// in graded-lex order with no zero coefficients; the zero polynomial has no
// terms.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, BigRational>;

  MultiPoly() = default;
  MultiPoly(BigRational c);  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(VarId v);
  static MultiPoly variable(std::string_view name);
  static MultiPoly monomial(const Monomial& m, BigRational c);
  // Terms may be unsorted and contain duplicates or zeros.
  static MultiPoly from_terms(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const noexcept;
  [[nodiscard]] BigRational constant_value() const;  // coefficient of 1
  [[nodiscard]] bool has_integer_coefficients() const;
  [[nodiscard]] const Term& leading_term() const { return terms_.front(); }
  [[nodiscard]] const BigRational& leading_coefficient() const { return terms_.front().second; }
  [[nodiscard]] unsigned total_degree() const;
  [[nodiscard]] unsigned degree(VarId v) const;
  [[nodiscard]] std::uint32_t support() const;  // bitmask of variables present

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  [[nodiscard]] MultiPoly scaled(const BigRational& c) const;
  [[nodiscard]] MultiPoly mul_term(const Monomial& m, const BigRational& c) const;
  [[nodiscard]] MultiPoly pow(unsigned e) const;

  // Exact quotient if divisor divides *this, std::nullopt otherwise.
  [[nodiscard]] std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  // Positive rational c with (*this / c) having coprime integer coefficients.
  [[nodiscard]] BigRational content() const;
  // Primitive integer polynomial with positive leading coefficient
  // (normal form for atoms). Zero stays zero.
  [[nodiscard]] MultiPoly normalized() const;

  [[nodiscard]] BigRational eval(const Assignment& values) const;  // throws if a variable is unassigned
  // Substitutes v := value, leaving a polynomial in the remaining variables.
  [[nodiscard]] MultiPoly eval_var(VarId v, const BigRational& value) const;
  [[nodiscard]] MultiPoly substitute(VarId v, const MultiPoly& value) const;

  // Coefficients with respect to v, keyed by power of v.
  [[nodiscard]] std::map<unsigned, MultiPoly> coefficients_in(VarId v) const;

  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::size_t hash() const noexcept;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

// Total order on polynomials used for deterministic output: constants first
// (by value), then by total degree, then by the descending term sequence.
bool poly_less(const MultiPoly& a, const MultiPoly& b);

}  // namespace zagier

template <>
struct std::hash<zagier::MultiPoly> {
  std::size_t operator()(const zagier::MultiPoly& p) const noexcept { return p.hash(); }
};
