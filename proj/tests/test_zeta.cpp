#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "zagier/errors.hpp"
#include "zagier/numeric/polylog.hpp"
#include "zagier/zeta/zeta.hpp"

using namespace zagier;
using std::numbers::pi;

namespace {

// ζ_F(2) = Σ a(n)/n² with a(n) = #ideals of norm n = Σ_{d|n} χ_D(d). The tail
// past N is c/N, with c the mean of a(n) estimated from the partial sums.
double ideal_norm_zeta2(long D, long N) {
  std::vector<long> a(N + 1, 0);
  for (long d = 1; d <= N; ++d) {
    const int chi = kronecker(D, d);
    if (chi == 0) continue;
    for (long m = d; m <= N; m += d) a[m] += chi;
  }
  double sum = 0, count = 0;
  for (long n = N; n >= 1; --n) sum += static_cast<double>(a[n]) / (static_cast<double>(n) * n);
  for (long n = 1; n <= N; ++n) count += a[n];
  return sum + count / N / N;
}

}  // namespace

TEST_CASE("kronecker symbol and discriminants") {
  CHECK(kronecker(-4, 1) == 1);
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(-3, 2) == -1);
  CHECK(kronecker(-3, 7) == 1);
  CHECK(kronecker(-8, 3) == 1);
  CHECK(kronecker(-8, 5) == -1);
  CHECK(kronecker(5, 2) == -1);
  for (long D : {-3L, -4L, -7L, -8L, -11L, -15L, -19L, -20L, 5L, 8L, 12L, 1L})
    CHECK(is_fundamental_discriminant(D));
  for (long D : {-1L, -2L, -12L, -16L, 0L, 4L, -9L}) CHECK_FALSE(is_fundamental_discriminant(D));
  CHECK_THROWS_AS(QuadField(-12), InvalidDiscriminant);
  CHECK_THROWS_AS(QuadField(5), InvalidDiscriminant);
  CHECK_THROWS_AS(dirichlet_L(2, -12), InvalidDiscriminant);
}

TEST_CASE("Dirichlet L-values") {
  // Catalan's constant as an averaged alternating series.
  double s = 0, prev = 0;
  for (int k = 0; k < 200000; ++k) {
    prev = s;
    s += ((k % 2) ? -1.0 : 1.0) / ((2.0 * k + 1) * (2.0 * k + 1));
  }
  const double catalan = 0.5 * (s + prev);
  CHECK(std::abs(dirichlet_L(2, -4) - catalan) < 1e-12);
  CHECK(dirichlet_L(4, 1) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-14));
  CHECK(dirichlet_L(1, -3) == doctest::Approx(pi / (3 * std::sqrt(3.0))).epsilon(1e-13));
  CHECK(dirichlet_L(1, -4) == doctest::Approx(pi / 4).epsilon(1e-13));
  // Class number formula L(1, χ_D) = 2πh/(w√|D|), with h(−20) = 2, h(−23) = 3.
  CHECK(dirichlet_L(1, -20) == doctest::Approx(2 * pi * 2 / (2 * std::sqrt(20.0))).epsilon(1e-12));
  CHECK(dirichlet_L(1, -23) == doctest::Approx(2 * pi * 3 / (2 * std::sqrt(23.0))).epsilon(1e-12));
  CHECK(std::abs(dirichlet_L(3, -7, 12) - dirichlet_L(3, -7, 24)) < 1e-14);
}

TEST_CASE("Dedekind zeta against the ideal-norm series") {
  for (long D : {-3L, -4L, -7L, -8L, -11L, -15L, -19L, -20L}) {
    CAPTURE(D);
    CHECK(std::abs(dedekind_zeta2(D) - ideal_norm_zeta2(D, 1000000)) < 1e-6);
  }
}

TEST_CASE("rational reconstruction") {
  CHECK(reconstruct_rational(1.0 / 3 + 1e-12) == BigRational(1, 3));
  CHECK(reconstruct_rational(-22.0 / 7) == BigRational(-22, 7));
  CHECK(reconstruct_rational(5.0) == BigRational(5));
  CHECK_FALSE(reconstruct_rational(pi).has_value());
  CHECK_FALSE(reconstruct_rational(1.0 / 20011).has_value());
  CHECK(reconstruct_rational(1.0 / 20011, {30000, 1e-8}) == BigRational(1, 20011));
}

TEST_CASE("quadratic elements") {
  const auto i = parse_quad_element("i", -4);
  CHECK(std::abs(i.embed(-4) - std::complex<double>(0, 1)) < 1e-15);
  const auto w = parse_quad_element("(1+sqrt(-3))/2", -3);
  CHECK(std::abs(w.embed(-3) - std::complex<double>(0.5, std::sqrt(3.0) / 2)) < 1e-15);
  const auto t = parse_quad_element("1,1,2", -7);
  CHECK(t.a == 1);
  CHECK(t.b == 1);
  CHECK(t.c == 2);
  CHECK_THROWS(parse_quad_element("i", -3));
  CHECK_THROWS(parse_quad_element("1,1,0", -3));
  CHECK_THROWS(parse_quad_element("garbage", -3));
}

TEST_CASE("weight-two determinant check") {
  const auto r4 = zagier_check_n2(-4, parse_quad_element("i", -4));
  REQUIRE(r4.rational.has_value());
  CHECK(r4.stable);
  CHECK(r4.D_y == doctest::Approx(svp(2, std::complex<double>(0, 1))));
  CHECK(std::abs(r4.q - r4.rational->to_double()) < 1e-8);

  const auto r3 = zagier_check_n2(-3, parse_quad_element("(1+sqrt(-3))/2", -3));
  REQUIRE(r3.rational.has_value());
  CHECK(r3.stable);
  CHECK(r3.rational->denominator() <= 100);

  CHECK_THROWS_AS(zagier_check_n2(-4, QuadElement{1, 0, 1}), DegenerateWitness);
  CHECK_THROWS_AS(zagier_check_n2(-12, QuadElement{0, 1, 2}), InvalidDiscriminant);
}
