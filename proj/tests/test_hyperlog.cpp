#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "shuffle_kernel.hpp"
#include "zagier/errors.hpp"
#include "zagier/hyperlog/coproduct.hpp"

using namespace zagier;

namespace {

PPoint P(const char* name) { return PPoint::variable(name); }
FieldExpr F(const char* name) { return FieldExpr::variable(name); }
TensorElement T(const MultElement& m) { return TensorElement::from_mult(m); }

// [x]_n as −I(0; 1/x, 0, ..., 0; 1).
IComb polylog(unsigned n, const FieldExpr& x) {
  Word w{PPoint(x.inverse())};
  for (unsigned i = 1; i < n; ++i) w.push_back(PPoint(0));
  return IComb(ITerm{PPoint(0), w, PPoint(1)}, BigRational(-1));
}

ITerm sym31(const FieldExpr& x, const FieldExpr& y) {
  return ITerm{PPoint(0), {PPoint(x), PPoint(0), PPoint(0), PPoint(y)}, PPoint(1)};
}

TensorElement words_tensor(const std::vector<std::vector<MultElement>>& words) {
  TensorElement out(static_cast<unsigned>(words.front().size()));
  for (const auto& w : words) {
    TensorElement t = TensorElement::unit();
    for (const auto& m : w) t = t.tensor(T(m));
    out += t;
  }
  return out;
}

// ρ applied to the first k slots only.
TensorElement rho_prefix(const TensorElement& t, unsigned k) {
  std::map<TensorKey, std::vector<TensorTerm>> by_tail;
  const TensorElement canon = t.canonical();
  for (const auto& [key, c] : canon.terms()) {
    TensorKey head = empty_key(), tail = empty_key();
    for (unsigned i = 0; i < t.weight(); ++i) (i < k ? head[i] : tail[i - k]) = key[i];
    by_tail[tail].emplace_back(head, c);
  }
  TensorElement out(t.weight());
  for (auto& [tail, heads] : by_tail)
    out += rho_project(TensorElement::from_terms(k, std::move(heads)))
               .tensor(TensorElement::from_terms(t.weight() - k, {{tail, BigRational(1)}}));
  return out;
}

}  // namespace

TEST_CASE("shuffle") {
  const std::vector<int> x{1}, y{2};
  const auto s = shuffle(x, y);
  CHECK(s.size() == 2);
  CHECK(shuffle(std::vector<int>{}, std::vector<int>{4, 5}).size() == 1);
  const std::vector<int> u{1, 2, 3}, v{4, 5};
  long count = 0;
  for (const auto& [w, m] : shuffle(u, v)) count += m;
  CHECK(count == 10);
  const std::vector<int> aa{7, 7};
  const auto sq = shuffle(std::vector<int>{7}, std::vector<int>{7});
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].second == 2);
  CHECK(shuffle(aa, aa).size() == 1);
}

TEST_CASE("symbol examples") {
  const auto a0 = P("a"), a1 = P("b"), a2 = P("c");
  const auto s1 = symbol(ITerm{a0, {a1}, a2});
  CHECK(s1 == T(((F("c") - F("b")) / (F("a") - F("b"))).log()));

  const FieldExpr z = F("z");
  const auto li2 = symbol(ITerm{PPoint(0), {PPoint(z.inverse()), PPoint(0)}, PPoint(1)});
  CHECK(li2 == T(one_minus(z).log()).tensor(T(z.log())));
  CHECK(li2.size() == 1);

  CHECK(symbol(ITerm{a0, {a1, a2}, a0}).empty());
  CHECK(symbol(ITerm{a0, {}, a1}) == TensorElement::unit());
  CHECK_THROWS_AS(symbol(ITerm{PPoint(0), {PPoint(0), PPoint(z)}, PPoint(1)}), DivergentTerm);
  CHECK_NOTHROW(symbol(ITerm{PPoint(0), {PPoint(0), PPoint(z)}, PPoint(1)}, true));
}

TEST_CASE("symbol is affine invariant and reverses with sign") {
  const std::vector<PPoint> pts{P("A"), P("B"), P("C"), P("D"), P("E"), P("F")};
  const ITerm t{pts[0], {pts[1], pts[2], pts[3], pts[4]}, pts[5]};
  const auto s = symbol(t);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int i = 0; i < 3; ++i) {
    const FieldExpr alpha = FieldExpr(BigRational(d(rng) == 0 ? 3 : d(rng) | 1, 7));
    const FieldExpr beta = F("B") * BigRational(d(rng)) + BigRational(d(rng));
    const auto m = affine_map(pts, alpha, beta);
    CHECK(symbol(ITerm{m[0], {m[1], m[2], m[3], m[4]}, m[5]}) == s);
  }
  const ITerm rev{pts[5], {pts[4], pts[3], pts[2], pts[1]}, pts[0]};
  CHECK(symbol(rev) == s);
  const ITerm t3{pts[0], {pts[1], pts[2], pts[3]}, pts[4]};
  const ITerm r3{pts[4], {pts[3], pts[2], pts[1]}, pts[0]};
  CHECK(symbol(r3) == -symbol(t3));
}

TEST_CASE("rho examples and shuffle annihilation") {
  const auto x = F("x").log(), y = F("y").log(), z = F("z").log();
  CHECK(rho_project(T(x)) == T(x));
  CHECK(rho_project(T(x).tensor(T(y))) == T(x).tensor(T(y)) - T(y).tensor(T(x)));
  CHECK(rho_project(T(x).tensor(T(y)) + T(y).tensor(T(x))).empty());

  const std::vector<MultElement> alphabet{x, y, z};
  // All words u, v with |u| + |v| <= 4 over the alphabet.
  std::vector<std::vector<MultElement>> words{{}};
  std::vector<std::vector<std::vector<MultElement>>> by_len(4);
  by_len[0] = {{}};
  for (int len = 1; len <= 3; ++len)
    for (const auto& w : by_len[len - 1])
      for (const auto& a : alphabet) {
        auto nw = w;
        nw.push_back(a);
        by_len[len].push_back(nw);
      }
  int checked = 0;
  for (int lu = 1; lu <= 3; ++lu)
    for (int lv = 1; lu + lv <= 4; ++lv)
      for (const auto& u : by_len[lu])
        for (const auto& v : by_len[lv]) {
          std::vector<std::vector<MultElement>> terms;
          for (const auto& [w, m] : shuffle(u, v))
            for (long k = 0; k < m; ++k) terms.push_back(w);
          CHECK(rho_project(words_tensor(terms)).empty());
          ++checked;
        }
  CHECK(checked > 100);

  // ρ² = nρ on a random weight-4 tensor.
  const auto s = symbol(ITerm{P("A"), {P("B"), P("C"), P("D"), P("E")}, P("F")});
  CHECK(rho_project(rho_project(s)) == rho_project(s).scaled(BigRational(4)));
}

TEST_CASE("coproduct components") {
  const auto a0 = P("A"), a1 = P("B"), a2 = P("C"), a3 = P("D");
  const ITerm t{a0, {a1, a2}, a3};
  const unsigned shape11[] = {1, 1};
  const auto c = coproduct_component(t, shape11);
  REQUIRE(c.size() == 2);
  // I(a0;a1;a3) ⊗ I(a1;a2;a3) + I(a0;a2;a3) ⊗ I(a0;a1;a2)
  const IProduct L1{ITerm{a0, {a1}, a3}}, R1{ITerm{a1, {a2}, a3}};
  const IProduct L2{ITerm{a0, {a2}, a3}}, R2{ITerm{a0, {a1}, a2}};
  bool found1 = false, found2 = false;
  for (const auto& term : c) {
    CHECK(term.coef == BigRational(1));
    if (term.factors[0] == L1 && term.factors[1] == R1) found1 = true;
    if (term.factors[0] == L2 && term.factors[1] == R2) found2 = true;
  }
  CHECK(found1);
  CHECK(found2);

  // The (1,...,1) component realizes the symbol.
  const ITerm t4{P("A"), {P("B"), P("C"), P("D"), P("E")}, P("F")};
  const unsigned ones[] = {1, 1, 1, 1};
  CHECK(symbol_image(coproduct_component(t4, ones)) == symbol(t4));

  // Coassociativity: (Δ⊗id)Δ and (id⊗Δ)Δ reach (1,1,2) alike.
  const unsigned s22[] = {2, 2}, s11[] = {1, 1}, s13[] = {1, 3}, s12[] = {1, 2};
  CoproductExpansion route1, route2;
  for (const auto& term : coproduct_component(t4, s22))
    for (auto& sub : coproduct_component(term.factors[0], s11)) {
      sub.coef *= term.coef;
      sub.factors.push_back(term.factors[1]);
      route1.push_back(sub);
    }
  for (const auto& term : coproduct_component(t4, s13))
    for (const auto& sub : coproduct_component(term.factors[1], s12)) {
      CoproductTerm out{term.coef * sub.coef, {term.factors[0], sub.factors[0], sub.factors[1]}};
      route2.push_back(out);
    }
  const unsigned s112[] = {1, 1, 2};
  const auto direct = coproduct_component(t4, s112);
  CHECK(symbol_image(route1) == symbol_image(route2));
  CHECK(symbol_image(route1) == symbol_image(direct));
}

TEST_CASE("cobracket normalization on classical polylogarithms") {
  const FieldExpr x = F("x");
  const auto lx = x.log(), l1x = one_minus(x).log();
  CHECK(delta2(polylog(2, x)) == wedge(l1x, lx));
  const auto chain = cobracket_chain(polylog(4, x));
  CHECK(chain == wedge(l1x, lx).tensor(T(lx).tensor(T(lx))));

  // (3,1) part of [x]4 is [x]3 ⊗ x.
  const auto terms = delta_n1(polylog(4, x).terms()[0].first);
  TensorElement image(4);
  for (const auto& s : terms)
    image += symbol(s.left, true).tensor(T(weight_one_log(s.right))).scaled(-s.coef);
  CHECK(rho_prefix(image, 3) == rho_project(symbol(polylog(3, x))).tensor(T(lx)));
}

TEST_CASE("chain equals minus rho of the symbol") {
  const ITerm t{P("A"), {P("B"), P("C"), P("D"), P("E")}, P("F")};
  const auto chain = cobracket_chain(t);
  CHECK(chain.size() > 0);
  CHECK(chain.to_tensor() == -rho_project(symbol(t)));
  const ITerm s = sym31(F("x"), F("y"));
  CHECK(cobracket_chain(s).to_tensor() == -rho_project(symbol(s)));
}

TEST_CASE("delta22 of [x,z]31 and antisymmetry") {
  const FieldExpr x = F("x"), z = F("z");
  const TensorElement dx = delta2(polylog(2, x)).to_tensor();
  const TensorElement dz = delta2(polylog(2, z)).to_tensor();
  CHECK(delta22_pushed(sym31(x, z)) == dx.tensor(dz) - dz.tensor(dx));

  IComb anti(sym31(x, z));
  anti.add(sym31(z, x));
  CHECK(is_zero(cobracket_chain(anti)).zero);
  CHECK(is_zero(rho_project(symbol(anti))).zero);
}

TEST_CASE("parallel and serial expansion agree") {
  IComb c;
  const std::vector<PPoint> pts{P("A"), P("B"), P("C"), P("D"), P("E"), P("F")};
  for (int i = 0; i < 6; ++i) {
    std::vector<PPoint> r(pts.begin() + i, pts.end());
    r.insert(r.end(), pts.begin(), pts.begin() + i);
    c.add(ITerm{r[0], {r[1], r[2], r[3], r[4]}, r[5]}, BigRational(i + 1));
  }
  CHECK(symbol(c) == symbol_serial(c));
  CHECK(cobracket_chain(c) == cobracket_chain_serial(c));
}

TEST_CASE("kernel of rho is exactly the span of shuffles") {
  const std::vector<MultElement> alphabet{F("p").log(), F("q").log(), (F("p") - F("q")).log()};
  // Dimensions 3^n minus the number of Lyndon words: 9 − 3 and 27 − 8.
  const std::size_t expect[] = {0, 0, 6, 19};
  for (unsigned n = 2; n <= 3; ++n) {
    const auto r = kernel_check::run(alphabet, n);
    CHECK(r.shuffles_in_kernel);
    CHECK(r.kernel_dim == r.shuffle_rank);
    CHECK(r.kernel_dim == expect[n]);
  }
}

TEST_CASE("rho and the chain vanish on products") {
  const auto a = symbol(ITerm{PPoint(0), {P("x")}, PPoint(1)});
  const auto b = symbol(ITerm{PPoint(0), {P("y"), P("z"), P("w")}, PPoint(1)});
  CHECK(rho_project(shuffle_tensor(a, b)).empty());
  const auto c = symbol(ITerm{PPoint(0), {P("x"), P("z")}, PPoint(1)});
  const auto d = symbol(ITerm{PPoint(0), {P("y"), P("w")}, PPoint(1)});
  CHECK(rho_project(shuffle_tensor(c, d)).empty());
  // With common endpoints a product of integrals is the shuffle of their words.
  IComb sh;
  for (const auto& [w, m] : shuffle(std::vector<PPoint>{P("x")}, std::vector<PPoint>{P("y"), P("z"), P("w")}))
    sh.add(ITerm{PPoint(0), w, PPoint(1)}, BigRational(m));
  CHECK(symbol(sh) == shuffle_tensor(a, b));
  CHECK(is_zero(cobracket_chain(sh)).zero);
}
