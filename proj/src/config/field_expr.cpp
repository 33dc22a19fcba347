#include "zagier/config/field_expr.hpp"

#include "zagier/errors.hpp"
#include "zagier/exact/poly_gcd.hpp"

namespace zagier {
namespace {

// Numerator and denominator of p(v := n/d), i.e. sum p_k n^k d^(deg-k) and
// d^deg.
std::pair<MultiPoly, MultiPoly> substitute_poly(const MultiPoly& p, VarId v, const MultiPoly& n, const MultiPoly& d) {
  const auto coeffs = p.coefficients_in(v);
  if (coeffs.empty()) return {MultiPoly(), MultiPoly(1)};
  const unsigned deg = coeffs.rbegin()->first;
  MultiPoly out;
  for (const auto& [k, c] : coeffs) out += c * n.pow(k) * d.pow(deg - k);
  return {out, d.pow(deg)};
}

}  // namespace

FieldExpr::FieldExpr(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw DegenerateArgument("division by zero in " + num.str() + " / 0");
  if (num.is_zero()) {
    num_ = MultiPoly();
    den_ = MultiPoly(1);
    return;
  }
  if (!den.is_constant() && !num.is_constant()) {
    const MultiPoly g = poly_gcd(num, den);
    if (!g.is_constant()) {
      num = *num.divide_exact(g);
      den = *den.divide_exact(g);
    }
  }
  const PrimitiveSplit split = primitive_split(den);
  num_ = num.scaled(split.factor.inverse());
  den_ = split.primitive;
}

bool FieldExpr::is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value().is_one(); }

BigRational FieldExpr::constant_value() const { return num_.constant_value(); }

FieldExpr& FieldExpr::operator+=(const FieldExpr& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    *this = FieldExpr(num_ + rhs.num_, den_);
  } else {
    *this = FieldExpr(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

FieldExpr& FieldExpr::operator-=(const FieldExpr& rhs) { return *this += -rhs; }

FieldExpr& FieldExpr::operator*=(const FieldExpr& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = FieldExpr();
  *this = FieldExpr(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

FieldExpr& FieldExpr::operator/=(const FieldExpr& rhs) {
  if (rhs.is_zero()) throw DegenerateArgument("division by zero: (" + str() + ") / 0");
  *this = FieldExpr(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

FieldExpr FieldExpr::operator-() const {
  FieldExpr out = *this;
  out.num_ = -num_;
  return out;
}

FieldExpr FieldExpr::inverse() const {
  if (is_zero()) throw DegenerateArgument("inverse of zero");
  return FieldExpr(den_, num_);
}

SpecValue FieldExpr::specialize(const Assignment& values) const {
  const BigRational n = num_.eval(values);
  const BigRational d = den_.eval(values);
  if (d.is_zero()) return {n.is_zero() ? SpecValue::Kind::Degenerate : SpecValue::Kind::Infinity, BigRational(0)};
  return {SpecValue::Kind::Value, n / d};
}

FieldExpr FieldExpr::substitute(VarId v, const FieldExpr& value) const {
  if (!(support() & (1U << v))) return *this;
  auto [nn, nd] = substitute_poly(num_, v, value.num(), value.den());
  auto [dn, dd] = substitute_poly(den_, v, value.num(), value.den());
  if (dn.is_zero()) throw DegenerateArgument("substitution makes the denominator of " + str() + " vanish");
  return FieldExpr(nn * dd, dn * nd);
}

MultElement FieldExpr::log() const {
  if (is_zero()) throw DegenerateArgument("logarithm of zero");
  return mult_from_ratio(num_, den_);
}

std::string FieldExpr::str() const {
  if (den_.is_constant()) return num_.str();
  const std::string n = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
  const std::string d = den_.size() > 1 ? "(" + den_.str() + ")" : den_.str();
  return n + "/" + d;
}

std::size_t FieldExpr::hash() const noexcept { return num_.hash() * 0x9e3779b97f4a7c15ULL ^ den_.hash(); }

}  // namespace zagier
