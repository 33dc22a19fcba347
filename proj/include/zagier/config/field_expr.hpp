#pragma once

#include <string>
#include <string_view>

#include "zagier/exact/multi_poly.hpp"
#include "zagier/mult/mult_element.hpp"

namespace zagier {

// Result of evaluating a rational function at a rational point.
struct SpecValue {
  enum class Kind { Value, Infinity, Degenerate };
  Kind kind = Kind::Value;
  BigRational value;

  [[nodiscard]] bool is_value() const noexcept { return kind == Kind::Value; }
  [[nodiscard]] bool is_infinity() const noexcept { return kind == Kind::Infinity; }
  [[nodiscard]] bool is_degenerate() const noexcept { return kind == Kind::Degenerate; }
};

// Element of Q(vars) as num/den with gcd(num, den) = 1 and den primitive with
// positive leading coefficient. Zero is 0/1.
class FieldExpr {
 public:
  FieldExpr() : num_(0), den_(1) {}
  FieldExpr(BigRational c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  FieldExpr(int c) : FieldExpr(BigRational(c)) {}             // NOLINT(google-explicit-constructor)
  explicit FieldExpr(MultiPoly num, MultiPoly den = MultiPoly(1));

  static FieldExpr variable(std::string_view name) { return FieldExpr(MultiPoly::variable(name)); }

  [[nodiscard]] const MultiPoly& num() const noexcept { return num_; }
  [[nodiscard]] const MultiPoly& den() const noexcept { return den_; }
  [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  [[nodiscard]] BigRational constant_value() const;
  [[nodiscard]] std::uint32_t support() const { return num_.support() | den_.support(); }

  FieldExpr& operator+=(const FieldExpr& rhs);
  FieldExpr& operator-=(const FieldExpr& rhs);
  FieldExpr& operator*=(const FieldExpr& rhs);
  FieldExpr& operator/=(const FieldExpr& rhs);  // DegenerateArgument on division by zero
  friend FieldExpr operator+(FieldExpr a, const FieldExpr& b) { return a += b; }
  friend FieldExpr operator-(FieldExpr a, const FieldExpr& b) { return a -= b; }
  friend FieldExpr operator*(FieldExpr a, const FieldExpr& b) { return a *= b; }
  friend FieldExpr operator/(FieldExpr a, const FieldExpr& b) { return a /= b; }
  FieldExpr operator-() const;
  [[nodiscard]] FieldExpr inverse() const;

  friend bool operator==(const FieldExpr& a, const FieldExpr& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  [[nodiscard]] SpecValue specialize(const Assignment& values) const;
  // v := value, for a rational function value.
  [[nodiscard]] FieldExpr substitute(VarId v, const FieldExpr& value) const;

  // Class in F*⊗Q. DegenerateArgument for zero.
  [[nodiscard]] MultElement log() const;

  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::size_t hash() const noexcept;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace zagier

template <>
struct std::hash<zagier::FieldExpr> {
  std::size_t operator()(const zagier::FieldExpr& e) const noexcept { return e.hash(); }
};
