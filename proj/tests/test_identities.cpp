#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zagier/errors.hpp"
#include "zagier/hyperlog/coproduct.hpp"
#include "zagier/identities/builders.hpp"
#include "zagier/identities/verify.hpp"
#include "zagier/numeric/iterated.hpp"

using namespace zagier;

namespace {

PPoint P(const char* name) { return PPoint::variable(name); }
FieldExpr F(const char* name) { return FieldExpr::variable(name); }

Points5 five() { return {P("A"), P("B"), P("C"), P("D"), P("E")}; }

PPoint partial(const PPoint& p, const Assignment& a) {
  if (p.is_infinity()) return p;
  FieldExpr e = p.expr();
  for (const auto& [v, q] : a) e = e.substitute(v, FieldExpr(q));
  return PPoint(e);
}

IComb specialize_comb(const IComb& c, const Assignment& a) {
  IComb out;
  for (const auto& [t, coef] : c.terms()) {
    ITerm s{partial(t.a0, a), {}, partial(t.end, a)};
    for (const auto& p : t.word) s.word.push_back(partial(p, a));
    out.add(s, coef);
  }
  return out;
}

}  // namespace

TEST_CASE("polylog embedding and [x,y]31") {
  const auto x = F("x");
  const auto l2 = polylog_embedding(2, x);
  REQUIRE(l2.terms().size() == 1);
  CHECK(l2.terms()[0].second == BigRational(-1));
  CHECK(delta2(l2) == wedge(one_minus(x).log(), x.log()));
  CHECK(symbol(polylog_embedding(1, x)) == -TensorElement::from_mult(one_minus(x).log()));
  CHECK_THROWS_AS(polylog_embedding(3, FieldExpr(1)), DegenerateArgument);
  CHECK_THROWS_AS(polylog_embedding(3, FieldExpr(0)), DegenerateArgument);
  CHECK_THROWS_AS(sym_31(FieldExpr(0), x), DegenerateArgument);
  CHECK_THROWS_AS(sym_31(x, FieldExpr(1)), DegenerateArgument);
  const ITerm s = sym_31(x, F("y"));
  CHECK(s.weight() == 4);
  CHECK(s.a0 == PPoint(0));
  CHECK(s.end == PPoint(1));
}

TEST_CASE("cycl is invariant under rotation") {
  const auto pts = five();
  auto h = [](const Points5& p) { return IComb(ITerm{p[0], {p[1], p[2], p[3], p[0]}, p[4]}); };
  const IComb c = cycl(h, pts);
  const Points5 rot{pts[1], pts[2], pts[3], pts[4], pts[0]};
  CHECK(c == cycl(h, rot));
  CHECK(c.terms().size() == 5);
}

TEST_CASE("g has twenty terms with the printed coefficients") {
  const IComb g = build_g(five());
  CHECK(g.terms().size() == 20);
  std::map<BigRational, int> counts;
  for (const auto& [t, c] : g.terms()) {
    CHECK(t.weight() == 4);
    CHECK(t.a0 == PPoint(0));
    CHECK(t.end == PPoint(1));
    ++counts[c];
  }
  CHECK(counts[BigRational(1)] == 5);
  CHECK(counts[BigRational(-1)] == 5);
  CHECK(counts[BigRational(3)] == 5);
  CHECK(counts[BigRational(-3)] == 5);

  // One point at infinity is allowed, two are not.
  Points5 one_inf = five();
  one_inf[2] = PPoint::infinity();
  CHECK_NOTHROW(build_g(one_inf));
  Points5 two_inf = one_inf;
  two_inf[4] = PPoint::infinity();
  CHECK_THROWS(build_g(two_inf));
}

TEST_CASE("f is -1/20 times its stated combination") {
  const auto pts = five();
  const IComb f = build_f(pts);
  IComb minus20 = build_g(pts);
  for (int k = 0; k < 5; ++k) {
    Points5 q = pts;
    q[k] = PPoint::infinity();
    minus20 -= build_g(q);
  }
  auto fam = [&](int sign, auto arg) {
    IComb c = cycl([&](const Points5& p) { return polylog_embedding(4, arg(p)); }, pts);
    minus20 += c.scaled(BigRational(10 * sign));
  };
  fam(-1, [](const Points5& p) { return (p[1].expr() - p[2].expr()) / (p[1].expr() - p[0].expr()); });
  fam(-1, [](const Points5& p) { return (p[0].expr() - p[1].expr()) / (p[0].expr() - p[3].expr()); });
  fam(1, [](const Points5& p) { return (p[1].expr() - p[0].expr()) / (p[1].expr() - p[3].expr()); });
  fam(-1, [](const Points5& p) { return (p[3].expr() - p[1].expr()) / (p[3].expr() - p[0].expr()); });
  CHECK(f == minus20.scaled(BigRational(-1, 20)));

  Points5 bad = pts;
  bad[0] = PPoint::infinity();
  CHECK_THROWS(build_f(bad));
}

TEST_CASE("builders commute with specialization") {
  const auto pts = five();
  const Assignment a{{VariableTable::global().intern("A"), BigRational(0)},
                     {VariableTable::global().intern("B"), BigRational(1)}};
  Points5 spec;
  for (int i = 0; i < 5; ++i) spec[i] = partial(pts[i], a);
  CHECK(specialize_comb(build_g(pts), a) == build_g(spec));
  CHECK(symbol(specialize_comb(build_f(pts), a)) == symbol(build_f(spec)));
}

TEST_CASE("five-term element") {
  const auto x = F("x"), y = F("y");
  const auto A = build_A(x, y);
  REQUIRE(A.size() == 5);
  const long signs[] = {1, -1, -1, 1, -1};
  WedgeTensor total(2);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(A[i].coef == BigRational(signs[i]));
    total += delta2(polylog_embedding(2, A[i].arg)).scaled(A[i].coef);
  }
  CHECK(is_zero(total).zero);
  CHECK(fiveterm_numeric_residual(100, 5) < 1e-9);
  CHECK_THROWS_AS(build_A(x, x), DegenerateArgument);
  CHECK_THROWS_AS(build_A(FieldExpr(1), y), DegenerateArgument);

  // Numeric cross-check against the independent Bloch–Wigner oracle.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 20; ++i) {
    const std::complex<double> zx(u(rng), u(rng)), zy(u(rng), u(rng));
    const std::complex<double> one(1, 0);
    const double s = oracle::bloch_wigner(zx) - oracle::bloch_wigner(zy) - oracle::bloch_wigner(zx / zy) +
                     oracle::bloch_wigner((one - zx) / (one - zy)) -
                     oracle::bloch_wigner((one - one / zx) / (one - one / zy));
    CHECK(std::abs(s) < 1e-9);
  }
}

TEST_CASE("B element has vanishing delta22") {
  const IComb B = build_B(F("x"), F("y"), F("z"));
  CHECK(B.terms().size() == 5);
  CHECK(is_zero(delta22_pushed(B)).zero);
  // The single terms do not vanish on their own.
  CHECK_FALSE(is_zero(delta22_pushed(IComb(sym_31(F("x"), F("z"))))).zero);
}

TEST_CASE("verify driver") {
  VerifyOptions opts;
  auto reports = run_verify(VerifyTarget::antisym31, opts);
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.residual_count == 0);
  }
  opts.decider = Decider::rho;
  CHECK(run_verify(VerifyTarget::antisym31, opts).size() == 1);

  opts = {};
  opts.random = true;
  opts.trials = 3;
  opts.seed = 11;
  const auto a = run_verify(VerifyTarget::fiveterm, opts);
  const auto b = run_verify(VerifyTarget::fiveterm, opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].status == CheckStatus::pass);
  }

  opts = {};
  opts.assignment = parse_assignment("A=0, B=1, C=1");
  CHECK_THROWS_AS(run_verify(VerifyTarget::theorem3, opts), DegenerateArgument);

  const auto parsed = parse_assignment("x=1/2,y=-3");
  CHECK(parsed.at("x") == BigRational(1, 2));
  CHECK(parsed.at("y") == BigRational(-3));
  CHECK_THROWS_AS(parse_assignment("x=1/0"), ParseError);
  CHECK_THROWS_AS(parse_assignment("x"), ParseError);
  CHECK_THROWS_AS(parse_assignment("=3"), ParseError);

  CHECK(parse_target("b-element") == VerifyTarget::b_element);
  CHECK(target_name(VerifyTarget::t0_tautology) == "t0-tautology");
  CHECK_FALSE(parse_target("nope").has_value());
}

TEST_CASE("report status tracks residual count") {
  ZeroCheck z;
  z.zero = false;
  z.residual_count = 3;
  z.sample = {"a", "b", "c"};
  const auto r = report_from("x", z);
  CHECK(r.status == CheckStatus::fail);
  CHECK(r.residual_count == 3);
  CHECK(r.residual_sample.size() == 3);
  CHECK(report_from("y", ZeroCheck{true, 0, {}}).status == CheckStatus::pass);
}

TEST_CASE("g with a point at infinity is the limit of large finite points") {
  auto value = [](const IComb& c) {
    auto num = [](const PPoint& p) { return cplx(p.expr().constant_value().to_double(), 0); };
    cplx total = 0;
    for (const auto& [t, coef] : c.terms()) {
      std::vector<cplx> word;
      std::vector<cplx> sing;
      for (const auto& p : t.word) {
        word.push_back(num(p));
        sing.push_back(num(p));
      }
      const cplx a0 = num(t.a0), end = num(t.end);
      total += coef.to_double() * iterated_integral_num(a0, word, end, Path::avoiding(a0, end, sing)).v;
    }
    return total;
  };
  const long nums[] = {2, 5, -3, 7, -1}, dens[] = {1, 1, 1, 2, 3};
  Points5 base;
  for (int i = 0; i < 5; ++i) base[i] = PPoint(FieldExpr(BigRational(nums[i], dens[i])));
  for (int k : {0, 2, 4}) {
    CAPTURE(k);
    Points5 at_inf = base, far = base;
    at_inf[k] = PPoint::infinity();
    far[k] = PPoint(FieldExpr(BigRational(10000000)));
    const cplx limit = value(build_g(at_inf));
    const cplx approx = value(build_g(far));
    CHECK(std::abs(limit - approx) < 1e-6 * std::max(1.0, std::abs(limit)));
  }
}

TEST_CASE("six-point discrepancies telescope") {
  std::vector<PPoint> p;
  for (const char* n : {"A", "B", "C", "D", "E", "F", "G"}) p.push_back(PPoint::variable(n));
  const Points6 first{p[0], p[1], p[2], p[3], p[4], p[5]};
  const Points6 second{p[1], p[2], p[3], p[4], p[5], p[6]};
  const IComb lhs = build_theorem3_discrepancy(first) + build_theorem3_discrepancy(second) -
                    IComb(ITerm{p[0], {p[1], p[2], p[3], p[4]}, p[5]}) -
                    IComb(ITerm{p[1], {p[2], p[3], p[4], p[5]}, p[6]});
  const IComb rhs = build_f({p[2], p[3], p[4], p[5], p[6]}) - build_f({p[0], p[1], p[2], p[3], p[4]});
  CHECK(lhs == rhs);
}
