#include "zagier/config/projective.hpp"

#include <stdexcept>

#include "zagier/errors.hpp"

namespace zagier {

const FieldExpr& PPoint::expr() const {
  if (inf_) throw std::logic_error("PPoint::expr on the point at infinity");
  return expr_;
}

std::optional<FieldExpr> difference(const PPoint& a, const PPoint& b) {
  if (a.is_infinity() || b.is_infinity()) return std::nullopt;
  return a.expr() - b.expr();
}

FieldExpr cross_ratio(const PPoint& A, const PPoint& B, const PPoint& C, const PPoint& D) {
  const PPoint* pts[4] = {&A, &B, &C, &D};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*pts[i] == *pts[j])
        throw DegenerateArgument("cr(" + A.str() + ", " + B.str() + ", " + C.str() + ", " + D.str() +
                                 "): coincident points");
  FieldExpr out(1);
  if (auto d = difference(A, C)) out *= *d;
  if (auto d = difference(B, D)) out *= *d;
  if (auto d = difference(A, D)) out /= *d;
  if (auto d = difference(B, C)) out /= *d;
  return out;
}

FieldExpr one_minus(const FieldExpr& x) {
  if (x.is_one()) throw DegenerateArgument("1 - x with x = 1");
  return FieldExpr(1) - x;
}

PPoint affine_map(const PPoint& p, const FieldExpr& alpha, const FieldExpr& beta) {
  if (alpha.is_zero()) throw DegenerateArgument("affine map with alpha = 0");
  if (p.is_infinity()) return p;
  return PPoint(alpha * p.expr() + beta);
}

std::vector<PPoint> affine_map(const std::vector<PPoint>& pts, const FieldExpr& alpha, const FieldExpr& beta) {
  std::vector<PPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(affine_map(p, alpha, beta));
  return out;
}

SpecValue specialize(const FieldExpr& expr, const Assignment& values) { return expr.specialize(values); }

std::optional<PPoint> specialize(const PPoint& p, const Assignment& values) {
  if (p.is_infinity()) return p;
  const SpecValue v = p.expr().specialize(values);
  if (v.is_degenerate()) return std::nullopt;
  if (v.is_infinity()) return PPoint::infinity();
  return PPoint(FieldExpr(v.value));
}

}  // namespace zagier
