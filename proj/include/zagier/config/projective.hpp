#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zagier/config/field_expr.hpp"

namespace zagier {

// Point of P^1 over Q(vars): a rational function or the point at infinity.
class PPoint {
 public:
  PPoint() = default;
  PPoint(FieldExpr e) : expr_(std::move(e)) {}  // NOLINT(google-explicit-constructor)
  PPoint(int c) : expr_(FieldExpr(c)) {}        // NOLINT(google-explicit-constructor)

  static PPoint infinity() {
    PPoint p;
    p.inf_ = true;
    return p;
  }
  static PPoint variable(std::string_view name) { return PPoint(FieldExpr::variable(name)); }

  [[nodiscard]] bool is_infinity() const noexcept { return inf_; }
  // Requires a finite point.
  [[nodiscard]] const FieldExpr& expr() const;

  friend bool operator==(const PPoint& a, const PPoint& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.expr_ == b.expr_);
  }

  [[nodiscard]] std::string str() const { return inf_ ? "inf" : expr_.str(); }
  [[nodiscard]] std::size_t hash() const noexcept { return inf_ ? 0x51ed270b27a3ULL : expr_.hash(); }

 private:
  FieldExpr expr_;
  bool inf_ = false;
};

// a - b, or nullopt when either point is infinite (the factor is dropped).
std::optional<FieldExpr> difference(const PPoint& a, const PPoint& b);

// (A−C)(B−D)/((A−D)(B−C)), dropping every difference that involves ∞.
// DegenerateArgument on coincident points.
FieldExpr cross_ratio(const PPoint& A, const PPoint& B, const PPoint& C, const PPoint& D);

// 1 − x; DegenerateArgument when x = 1.
FieldExpr one_minus(const FieldExpr& x);

// x ↦ αx + β on finite points, ∞ fixed. DegenerateArgument when α = 0.
std::vector<PPoint> affine_map(const std::vector<PPoint>& pts, const FieldExpr& alpha, const FieldExpr& beta);
PPoint affine_map(const PPoint& p, const FieldExpr& alpha, const FieldExpr& beta);

SpecValue specialize(const FieldExpr& expr, const Assignment& values);

// Rational point, ∞, or nullopt for 0/0.
std::optional<PPoint> specialize(const PPoint& p, const Assignment& values);

}  // namespace zagier

template <>
struct std::hash<zagier::PPoint> {
  std::size_t operator()(const zagier::PPoint& p) const noexcept { return p.hash(); }
};
