#include <random>

#include "doctest.h"
#include "zagier/exact/big_rational.hpp"
#include "zagier/exact/factor_refine.hpp"
#include "zagier/exact/multi_poly.hpp"
#include "zagier/exact/poly_gcd.hpp"

using namespace zagier;

namespace {

MultiPoly X() { return MultiPoly::variable("x"); }
MultiPoly Y() { return MultiPoly::variable("y"); }
MultiPoly Z() { return MultiPoly::variable("z"); }

MultiPoly random_poly(std::mt19937_64& rng, int terms, int max_deg) {
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<MultiPoly::Term> t;
  const VarId vars[3] = {*VariableTable::global().find("x"), *VariableTable::global().find("y"),
                         *VariableTable::global().find("z")};
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (VarId v : vars) m = m * Monomial::var(v, static_cast<unsigned>(deg(rng)));
    int c = coef(rng);
    if (c == 0) c = 1;
    t.emplace_back(m, BigRational(c));
  }
  return MultiPoly::from_terms(std::move(t));
}

// g divides both, and a random cofactor pair has no common factor detectable
// by evaluation: gcd(p/g, q/g) must be constant.
void check_gcd_oracle(const MultiPoly& p, const MultiPoly& q, const MultiPoly& g) {
  REQUIRE(p.divide_exact(g).has_value());
  REQUIRE(q.divide_exact(g).has_value());
  const auto pc = *p.divide_exact(g);
  const auto qc = *q.divide_exact(g);
  CHECK(gcd_detail::gcd_prs(pc, qc).is_constant());
}

}  // namespace

TEST_CASE("BigRational inline and big paths agree") {
  BigRational a(INT64_MAX);
  BigRational b = a * a;
  CHECK(!b.is_small());
  CHECK(b / a == a);
  CHECK((b / a).is_small());
  CHECK(BigRational(6, -4) == BigRational(-3, 2));
  CHECK(BigRational::parse("-3/6") == BigRational(-1, 2));
  CHECK(BigRational(1, 3) + BigRational(1, 6) == BigRational(1, 2));
  CHECK(BigRational(1, 3) < BigRational(1, 2));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> d(-(1LL << 62), 1LL << 62);
  for (int i = 0; i < 200; ++i) {
    long long p = d(rng), q = d(rng) | 1, r = d(rng), s = d(rng) | 1;
    BigRational x(p, q), y(r, s);
    mpq_class mx(to_mpz(p), to_mpz(q)), my(to_mpz(r), to_mpz(s));
    mx.canonicalize();
    my.canonicalize();
    CHECK((x * y).to_mpq() == mx * my);
    CHECK((x + y).to_mpq() == mx + my);
    CHECK((x - y).to_mpq() == mx - my);
    if (r != 0) CHECK((x / y).to_mpq() == mx / my);
  }
}

TEST_CASE("MultiPoly arithmetic") {
  const auto x = X(), y = Y();
  const auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.total_degree() == 2);
  CHECK(*p.divide_exact(x - y) == x + y);
  CHECK(!p.divide_exact(x + 2).has_value());
  CHECK((x.scaled(BigRational(1, 2)) + BigRational(3, 4)).normalized() == x * 2 + 3);
  CHECK((-(x * 2) + 4).normalized() == x - 2);
  CHECK(p.substitute(*VariableTable::global().find("y"), x) == MultiPoly());
}

TEST_CASE("eval is a ring morphism") {
  std::mt19937_64 rng(11);
  const auto x = X(), y = Y(), z = Z();
  (void)x; (void)y; (void)z;
  Assignment at{{*VariableTable::global().find("x"), BigRational(3, 7)},
                {*VariableTable::global().find("y"), BigRational(-5, 2)},
                {*VariableTable::global().find("z"), BigRational(11)}};
  for (int i = 0; i < 50; ++i) {
    const auto p = random_poly(rng, 4, 3), q = random_poly(rng, 4, 3);
    CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
  }
}

TEST_CASE("gcd basic cases") {
  const auto x = X(), y = Y();
  CHECK(poly_gcd(x * x - 1, x * x - x * 2 + 1) == x - 1);
  CHECK(poly_gcd(x * y, y * y) == y);
  CHECK(poly_gcd(x + 1, x + 2).is_constant());
  CHECK(poly_gcd(MultiPoly(), x - y) == x - y);
  CHECK(poly_gcd((x - y) * 6, (x - y) * (x + y) * 4) == x - y);
  CHECK_THROWS(poly_gcd(MultiPoly(), MultiPoly()));
}

TEST_CASE("gcd of products recovers common factor") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 40; ++i) {
    const auto p = random_poly(rng, 3, 2), q = random_poly(rng, 3, 2), r = random_poly(rng, 3, 2);
    if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
    const auto a = p * r, b = q * r;
    const auto g = poly_gcd(a, b);
    check_gcd_oracle(a, b, g);
    CHECK(g.divide_exact(r.normalized()).has_value());
    CHECK(g == gcd_detail::gcd_prs(a, b).normalized());
  }
}

TEST_CASE("coprimality certificate never lies") {
  std::mt19937_64 rng(99);
  const auto x = X();
  for (int i = 0; i < 40; ++i) {
    const auto p = random_poly(rng, 3, 2).normalized(), q = random_poly(rng, 3, 2).normalized();
    if (p.is_constant() || q.is_constant()) continue;
    if (gcd_detail::certify_coprime(p, q)) CHECK(gcd_detail::gcd_prs(p, q).is_constant());
    CHECK(!gcd_detail::certify_coprime(p * (x + 1), q * (x + 1)));
  }
}

TEST_CASE("factor_refine examples") {
  const auto x = X();
  {
    std::vector<MultiPoly> in{x * x - 1, x - 1};
    const auto r = factor_refine(in);
    REQUIRE(r.basis.size() == 2);
    CHECK(r.basis[0] == x - 1);
    CHECK(r.basis[1] == x + 1);
    CHECK(r.exponents[0] == std::vector<long>{1, 1});
    CHECK(r.exponents[1] == std::vector<long>{1, 0});
  }
  {
    std::vector<MultiPoly> in{MultiPoly(6), MultiPoly(10)};
    const auto r = factor_refine(in);
    REQUIRE(r.basis.size() == 3);
    CHECK(r.basis[0] == MultiPoly(2));
    CHECK(r.basis[1] == MultiPoly(3));
    CHECK(r.basis[2] == MultiPoly(5));
  }
  {
    std::vector<MultiPoly> in{x + 3, x + 3};
    CHECK(factor_refine(in).basis.size() == 1);
  }
  {
    std::vector<MultiPoly> in{x, MultiPoly()};
    CHECK_THROWS_AS(factor_refine(in), std::invalid_argument);
  }
}

TEST_CASE("factor_refine big integer refinement") {
  const mpz_class p1("1000000000000000000117"), p2("1000000000000000000193");
  std::vector<MultiPoly> in{MultiPoly(BigRational(mpz_class(p1 * p2))), MultiPoly(BigRational(mpz_class(p1 * p1)))};
  const auto r = factor_refine(in);
  REQUIRE(r.basis.size() == 2);
  CHECK(r.exponents[0] == std::vector<long>{1, 1});
  CHECK(r.exponents[1] == std::vector<long>{2, 0});
}

TEST_CASE("factor_refine reconstructs random inputs with a coprime basis") {
  std::mt19937_64 rng(5);
  std::vector<MultiPoly> pool;
  for (int i = 0; i < 8; ++i) pool.push_back(random_poly(rng, 2, 1));
  std::vector<MultiPoly> in;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 100; ++i) {
    auto p = pool[pick(rng)] * pool[pick(rng)];
    if (!p.is_zero()) in.push_back(p * BigRational(i + 1, 3));
  }
  const auto r = factor_refine(in);
  for (std::size_t i = 0; i < in.size(); ++i) {
    MultiPoly num(r.units[i]), den(1);
    for (std::size_t j = 0; j < r.basis.size(); ++j) {
      const long e = r.exponents[i][j];
      (e >= 0 ? num : den) *= r.basis[j].pow(static_cast<unsigned>(e >= 0 ? e : -e));
    }
    CHECK(in[i] * den == num);
  }
  for (std::size_t a = 0; a < r.basis.size(); ++a)
    for (std::size_t b = a + 1; b < r.basis.size(); ++b) {
      if (r.basis[a].is_constant() || r.basis[b].is_constant()) continue;
      CHECK(gcd_detail::gcd_prs(r.basis[a], r.basis[b]).is_constant());
    }
}
