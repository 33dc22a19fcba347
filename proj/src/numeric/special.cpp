#include "zagier/numeric/special.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "zagier/exact/big_rational.hpp"

namespace zagier {
namespace {

constexpr int kMaxBernoulli = 60;

const std::array<double, kMaxBernoulli + 1>& bernoulli_table() {
  // Exact rationals first; rounding once keeps every entry correctly rounded.
  static const std::array<double, kMaxBernoulli + 1> table = [] {
    std::array<BigRational, kMaxBernoulli + 1> b;
    b[0] = BigRational(1);
    for (int m = 1; m <= kMaxBernoulli; ++m) {
      BigRational s(0);
      BigRational binom(1);  // C(m+1, k)
      for (int k = 0; k < m; ++k) {
        s += binom * b[k];
        binom = binom * BigRational(m + 1 - k) / BigRational(k + 1);
      }
      b[m] = -s / BigRational(m + 1);
    }
    std::array<double, kMaxBernoulli + 1> out{};
    for (int k = 0; k <= kMaxBernoulli; ++k) out[k] = b[k].to_double();
    return out;
  }();
  return table;
}

}  // namespace

double bernoulli(int k) {
  if (k < 0 || k > kMaxBernoulli) throw std::out_of_range("bernoulli: index out of range");
  return bernoulli_table()[k];
}

double hurwitz_zeta(double s, double a, int shift) {
  if (!(s > 1) || !(a > 0)) throw std::domain_error("hurwitz_zeta needs s > 1 and a > 0");
  double sum = 0;
  const int n = shift;
  for (int k = 0; k < n; ++k) sum += std::pow(k + a, -s);
  // Tail Σ_{k≥n} (k + a)^{−s} by Euler–Maclaurin at x = n + a.
  const double x = n + a;
  sum += std::pow(x, 1 - s) / (s - 1) + 0.5 * std::pow(x, -s);
  double rising = s;  // s (s+1) ... (s+2j−2)
  double xp = std::pow(x, -s - 1);
  double fact = 2;  // (2j)!
  for (int j = 1; 2 * j <= kMaxBernoulli; ++j) {
    const double term = bernoulli(2 * j) / fact * rising * xp;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    xp /= x * x;
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return sum;
}

double zeta_int(int s) {
  if (s < 2) throw std::domain_error("zeta_int needs s >= 2");
  return hurwitz_zeta(s, 1.0);
}

double digamma(double x, int shift) {
  if (!(x > 0)) throw std::domain_error("digamma needs x > 0");
  double acc = 0;
  while (x < shift) {
    acc -= 1 / x;
    x += 1;
  }
  // ψ(x) ~ log x − 1/(2x) − Σ B_{2j} / (2j x^{2j}).
  double sum = std::log(x) - 0.5 / x;
  double xp = 1 / (x * x);
  for (int j = 1; 2 * j <= 30; ++j) {
    const double term = bernoulli(2 * j) / (2 * j) * xp;
    sum -= term;
    if (std::abs(term) < 1e-18) break;
    xp /= x * x;
  }
  return acc + sum;
}

}  // namespace zagier
