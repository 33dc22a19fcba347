#include "zagier/numeric/polylog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zagier/errors.hpp"
#include "zagier/numeric/special.hpp"

namespace zagier {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

cd li_series(int n, cd z) {
  cd sum = 0;
  cd zk = z;
  for (int k = 1; k < 2000; ++k) {
    const cd term = zk / std::pow(static_cast<double>(k), n);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    zk *= z;
  }
  return sum;
}

// Li_n(z) = Σ_{k≠n−1} ζ(n−k) μ^k/k! + μ^{n−1}/(n−1)! (H_{n−1} − log(−μ)),
// μ = log z, for |μ| < 2π. The ζ at non-positive arguments is written through
// ζ(2j) so that no large Bernoulli numbers appear.
cd li_log_series(int n, cd z) {
  const cd mu = std::log(z);
  cd sum = 0;
  cd mupow = 1;  // μ^k / k!
  for (int k = 0; k < n - 1; ++k) {
    sum += zeta_int(n - k) * mupow;
    mupow *= mu / static_cast<double>(k + 1);
  }
  double harmonic = 0;
  for (int j = 1; j < n; ++j) harmonic += 1.0 / j;
  sum += mupow * (harmonic - std::log(-mu));
  // k = n: ζ(0) = −1/2.
  mupow *= mu / static_cast<double>(n);
  sum += -0.5 * mupow;
  // k = n + 2j − 1: ζ(1−2j) μ^k / k! = (−1)^j 2 ζ(2j) (2j−1)!/k! μ^k/(2π)^{2j}.
  const cd mu2 = mu * mu;
  cd mpow = std::pow(mu, n - 1);  // μ^{n+2j−1} built incrementally
  const double twopi2 = 4 * kPi * kPi;
  double scale = 1;
  for (int j = 1; j < 200; ++j) {
    mpow *= mu2;
    scale /= twopi2;
    double ratio = 1;  // (2j−1)!/(n+2j−1)!
    for (int i = 1; i <= n; ++i) ratio /= (2 * j - 1 + i);
    const double zeta2j = j > 30 ? 1.0 : zeta_int(2 * j);
    const cd term = ((j % 2) ? -2.0 : 2.0) * zeta2j * ratio * scale * mpow;
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

// B_n(x) from the Bernoulli numbers.
cd bernoulli_poly(int n, cd x) {
  cd sum = 0;
  double binom = 1;
  for (int k = 0; k <= n; ++k) {
    sum += binom * bernoulli(k) * std::pow(x, n - k);
    binom = binom * (n - k) / (k + 1);
  }
  return sum;
}

cd li_principal(int n, cd z) {
  if (z == cd(0)) return 0;
  if (n == 1) return -std::log(1.0 - z);
  const double r = std::abs(z);
  if (r <= 0.5) return li_series(n, z);
  if (r < 2) return li_log_series(n, z);
  // Li_n(z) + (−1)^n Li_n(1/z) = −(2πi)^n/n! B_n(1/2 + log(−z)/(2πi)).
  const cd twopii(0, 2 * kPi);
  double fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  const cd rhs = -std::pow(twopii, n) / fact * bernoulli_poly(n, 0.5 + std::log(-z) / twopii);
  const cd inv = li_principal(n, 1.0 / z);
  return rhs - ((n % 2) ? -inv : inv);
}

double svp_direct(int n, cd z) {
  const double lg = std::log(std::norm(z));  // log(z z̄)
  cd sum = 0;
  double lpow = 1;
  double fact = 1;
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      lpow *= lg;
      fact *= k;
    }
    if (k > 0 && lpow == 0) break;
    sum += bernoulli(k) / fact * lpow * li_principal(n - k, z);
  }
  return (n % 2) ? sum.real() : sum.imag();
}

}  // namespace

ComplexVal li_n(int n, const ComplexVal& z) {
  if (n < 1) throw std::domain_error("li_n needs n >= 1");
  const cd w = z.v;
  if (w.imag() == 0 && w.real() > 1) throw BranchAmbiguity("li_n: argument on the branch cut (1, inf)");
  if (w == cd(1)) {
    if (n == 1) throw DegenerateArgument("li_1 diverges at 1");
    return ComplexVal(cd(zeta_int(n)), 4 * ComplexVal::kEps);
  }
  const cd value = li_principal(n, w);
  // Propagated input error through |Li_n'(z)| = |Li_{n−1}(z)/z|, plus a
  // rounding allowance.
  double deriv = 0;
  if (z.err > 0 && w != cd(0)) deriv = std::abs((n == 1 ? 1.0 / (1.0 - w) : li_principal(n - 1, w) / w));
  return {value, 64 * ComplexVal::kEps * std::max(1.0, std::abs(value)) + deriv * z.err};
}

double svp(int n, std::complex<double> z) {
  if (n < 2) throw std::domain_error("svp needs n >= 2");
  if (z == cd(0)) throw DegenerateArgument("svp at z = 0");
  if (z == cd(1)) return (n % 2) ? zeta_int(n) : 0.0;
  // Single-valued, and svp(1/z) = (−1)^{n−1} svp(z); evaluate inside the disk.
  if (std::abs(z) > 1) return ((n % 2) ? 1.0 : -1.0) * svp_direct(n, 1.0 / z);
  return svp_direct(n, z);
}

double bloch_wigner(std::complex<double> z) {
  if (z == cd(0) || z == cd(1)) return 0;
  return svp(2, z);
}

double svp_monodromy_residual(int n, double radius, int samples) {
  // The raw principal-branch formula on both sides of the cut, at the points
  // where loops |z − 1| = r (0 < r ≤ radius) cross it.
  double worst = 0;
  const double eps = 1e-10;
  for (int j = 1; j <= samples; ++j) {
    const double x = 1 + radius * static_cast<double>(j) / samples;
    worst = std::max(worst, std::abs(svp_direct(n, cd(x, eps)) - svp_direct(n, cd(x, -eps))));
  }
  return worst;
}

}  // namespace zagier
