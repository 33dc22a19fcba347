#include "zagier/identities/builders.hpp"

#include <string>

#include "zagier/errors.hpp"

namespace zagier {
namespace {

void require_generic(const FieldExpr& x, const std::string& what) {
  if (x.is_zero()) throw DegenerateArgument(what + " is 0");
  if (x.is_one()) throw DegenerateArgument(what + " is 1");
}

Points5 rotate(const Points5& p, std::size_t k) {
  Points5 r;
  for (std::size_t i = 0; i < 5; ++i) r[i] = p[(i + k) % 5];
  return r;
}

FieldExpr named_cross_ratio(const PPoint& a, const PPoint& b, const PPoint& c, const PPoint& d,
                            const std::string& label) {
  try {
    return cross_ratio(a, b, c, d);
  } catch (const DegenerateArgument& e) {
    throw DegenerateArgument(label + ": " + e.what());
  }
}

// The four [·,·]_{3,1} shapes of g at a single rotation.
IComb g_block(const Points5& p) {
  const auto& [A, B, C, D, E] = p;
  auto term = [&](const PPoint& p1, const PPoint& p2, const PPoint& p3, const PPoint& p4, const PPoint& q1,
                  const PPoint& q2, const PPoint& q3, const PPoint& q4, const char* label) {
    const FieldExpr x = named_cross_ratio(p1, p2, p3, p4, label);
    const FieldExpr y = named_cross_ratio(q1, q2, q3, q4, label);
    try {
      return sym_31(x, y);
    } catch (const DegenerateArgument& e) {
      throw DegenerateArgument(std::string(label) + ": " + e.what());
    }
  };
  IComb out;
  out.add(term(A, B, C, D, B, C, D, E, "[ABCD,BCDE]"), BigRational(1));
  out.add(term(E, D, C, B, E, D, C, A, "[EDCB,EDCA]"), BigRational(-1));
  out.add(term(A, B, D, C, A, B, D, E, "[ABDC,ABDE]"), BigRational(-3));
  out.add(term(E, D, B, C, E, D, B, A, "[EDBC,EDBA]"), BigRational(3));
  return out;
}

}  // namespace

IComb polylog_embedding(unsigned n, const FieldExpr& x) {
  if (n == 0) throw std::invalid_argument("polylog_embedding: weight 0");
  require_generic(x, "argument " + x.str() + " of [x]_" + std::to_string(n));
  Word w{PPoint(x.inverse())};
  for (unsigned i = 1; i < n; ++i) w.emplace_back(0);
  return IComb(ITerm{PPoint(0), std::move(w), PPoint(1)}, BigRational(-1));
}

ITerm sym_31(const FieldExpr& x, const FieldExpr& y) {
  if (x.is_zero()) throw DegenerateArgument("[x,y]_{3,1} with x = 0");
  if (y.is_one()) throw DegenerateArgument("[x,y]_{3,1} with y = 1");
  return ITerm{PPoint(0), {PPoint(x), PPoint(0), PPoint(0), PPoint(y)}, PPoint(1)};
}

IComb cycl(const std::function<IComb(const Points5&)>& h, const Points5& pts) {
  IComb out;
  for (std::size_t k = 0; k < 5; ++k) out += h(rotate(pts, k));
  return out;
}

IComb build_g(const Points5& pts) {
  int infinite = 0;
  for (const auto& p : pts) infinite += p.is_infinity() ? 1 : 0;
  if (infinite > 1) throw DegenerateArgument("g: more than one point at infinity");
  return cycl(g_block, pts);
}

IComb build_f(const Points5& pts) {
  for (const auto& p : pts)
    if (p.is_infinity()) throw DegenerateArgument("f needs five finite points");
  IComb minus20f = build_g(pts);
  for (std::size_t k = 0; k < 5; ++k) {
    Points5 q = pts;
    q[k] = PPoint::infinity();
    minus20f -= build_g(q);
  }
  auto family = [](FieldExpr (*arg)(const Points5&)) {
    return [arg](const Points5& p) { return polylog_embedding(4, arg(p)); };
  };
  const auto a1 = +[](const Points5& p) { return (p[1].expr() - p[2].expr()) / (p[1].expr() - p[0].expr()); };
  const auto a2 = +[](const Points5& p) { return (p[0].expr() - p[1].expr()) / (p[0].expr() - p[3].expr()); };
  const auto a3 = +[](const Points5& p) { return (p[1].expr() - p[0].expr()) / (p[1].expr() - p[3].expr()); };
  const auto a4 = +[](const Points5& p) { return (p[3].expr() - p[1].expr()) / (p[3].expr() - p[0].expr()); };
  minus20f -= cycl(family(a1), pts).scaled(BigRational(10));
  minus20f -= cycl(family(a2), pts).scaled(BigRational(10));
  minus20f += cycl(family(a3), pts).scaled(BigRational(10));
  minus20f -= cycl(family(a4), pts).scaled(BigRational(10));
  return minus20f.scaled(BigRational(-1, 20));
}

IComb build_theorem3_discrepancy(const Points6& p) {
  IComb phi(ITerm{p[0], {p[1], p[2], p[3], p[4]}, p[5]});
  phi -= build_f({p[0], p[1], p[2], p[3], p[4]});
  phi += build_f({p[1], p[2], p[3], p[4], p[5]});
  return phi;
}

std::vector<WeightedArgument> build_A(const FieldExpr& x, const FieldExpr& y) {
  require_generic(x, "x");
  require_generic(y, "y");
  if (x == y) throw DegenerateArgument("A(x,y) needs x != y");
  const FieldExpr one(1);
  std::vector<WeightedArgument> out{
      {x, BigRational(1)},
      {y, BigRational(-1)},
      {x / y, BigRational(-1)},
      {one_minus(x) / one_minus(y), BigRational(1)},
      {one_minus(x.inverse()) / one_minus(y.inverse()), BigRational(-1)},
  };
  const char* names[] = {"x", "y", "x/y", "(1-x)/(1-y)", "(1-1/x)/(1-1/y)"};
  for (std::size_t i = 0; i < out.size(); ++i) require_generic(out[i].arg, names[i]);
  return out;
}

IComb build_B(const FieldExpr& x, const FieldExpr& y, const FieldExpr& z) {
  require_generic(z, "z");
  IComb out;
  for (const auto& [a, c] : build_A(x, y)) out.add(sym_31(a, z), c);
  return out;
}

}  // namespace zagier
