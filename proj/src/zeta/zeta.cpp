#include "zagier/zeta/zeta.hpp"

#include <cmath>
#include <numbers>
#include <regex>
#include <stdexcept>

#include "zagier/errors.hpp"
#include "zagier/numeric/polylog.hpp"
#include "zagier/numeric/special.hpp"

namespace zagier {
namespace {

bool squarefree(long m) {
  m = std::labs(m);
  for (long p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

int jacobi(long a, long n) {
  // n odd positive.
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

void require_fundamental(long D) {
  if (!is_fundamental_discriminant(D))
    throw InvalidDiscriminant(std::to_string(D) + " is not a fundamental discriminant");
}

}  // namespace

int kronecker(long D, long n) {
  if (n < 1) throw std::domain_error("kronecker needs n >= 1");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (D % 2 == 0) return 0;
    const long r = mod(D, 8);
    if (r == 3 || r == 5) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(D, n);
}

bool is_fundamental_discriminant(long D) {
  if (D == 1) return true;
  if (D == 0) return false;
  if (mod(D, 4) == 1) return squarefree(D);
  if (mod(D, 4) != 0) return false;
  const long m = D / 4;
  const long r = mod(m, 4);
  return (r == 2 || r == 3) && squarefree(m);
}

QuadField::QuadField(long disc) : D(disc) {
  if (disc >= 0 || !is_fundamental_discriminant(disc))
    throw InvalidDiscriminant(std::to_string(disc) + " is not a negative fundamental discriminant");
}

double dirichlet_L(int n, long D, int shift) {
  require_fundamental(D);
  if (n < 1) throw std::domain_error("dirichlet_L needs n >= 1");
  if (D == 1) {
    if (n == 1) throw std::domain_error("ζ has a pole at 1");
    return zeta_int(n);
  }
  const long k = std::labs(D);
  double sum = 0;
  for (long a = 1; a < k; ++a) {
    const int chi = kronecker(D, a);
    if (chi == 0) continue;
    const double x = static_cast<double>(a) / static_cast<double>(k);
    // Σ χ(a) = 0, so at n = 1 the divergent parts cancel and
    // L(1, χ) = −(1/k) Σ χ(a) ψ(a/k).
    sum += chi * (n == 1 ? -digamma(x, shift) : hurwitz_zeta(n, x, shift));
  }
  return sum / std::pow(static_cast<double>(k), n);
}

double dedekind_zeta2(long D, int shift) { return zeta_int(2) * dirichlet_L(2, D, shift); }

std::complex<double> QuadElement::embed(long D) const {
  const double s = std::sqrt(static_cast<double>(std::labs(D)));
  const std::complex<double> root = D < 0 ? std::complex<double>(0, s) : std::complex<double>(s, 0);
  return (static_cast<double>(a) + static_cast<double>(b) * root) / static_cast<double>(c);
}

std::string QuadElement::str() const {
  return "(" + std::to_string(a) + (b < 0 ? " - " : " + ") + std::to_string(std::labs(b)) + "*sqrt(D))/" +
         std::to_string(c);
}

QuadElement parse_quad_element(const std::string& text, long D) {
  if (text == "i") {
    if (D != -4) throw std::invalid_argument("'i' lies in Q(sqrt(D)) only for D = -4");
    return {0, 1, 2};
  }
  std::smatch m;
  static const std::regex triple(R"(^\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*$)");
  if (std::regex_match(text, m, triple)) {
    QuadElement e{std::stol(m[1]), std::stol(m[2]), std::stol(m[3])};
    if (e.c == 0) throw std::invalid_argument("zero denominator in " + text);
    return e;
  }
  static const std::regex surd(
      R"(^\s*\(?\s*(-?\d+)\s*([+-])\s*(\d*)\s*\*?\s*sqrt\(\s*(-?\d+)\s*\)\s*\)?\s*(?:/\s*(\d+))?\s*$)");
  if (std::regex_match(text, m, surd)) {
    if (std::stol(m[4]) != D) throw std::invalid_argument("sqrt argument differs from D in " + text);
    const long coef = m[3].str().empty() ? 1 : std::stol(m[3]);
    QuadElement e{std::stol(m[1]), m[2] == "-" ? -coef : coef, m[5].matched ? std::stol(m[5]) : 1};
    if (e.c == 0) throw std::invalid_argument("zero denominator in " + text);
    return e;
  }
  throw std::invalid_argument("cannot parse quadratic element '" + text + "'");
}

std::optional<BigRational> reconstruct_rational(double x, const ReconstructionConfig& cfg) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0;
    const long k2 = ai * k1 + k0;
    if (k2 > cfg.max_denominator) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= cfg.tolerance)
      return BigRational(h1, k1);
    const double frac = r - a;
    if (frac == 0) break;
    r = 1 / frac;
  }
  return std::nullopt;
}

ZagierReport zagier_check_n2(long D, const QuadElement& y, const ReconstructionConfig& cfg) {
  const QuadField field(D);
  const auto z = y.embed(D);
  auto q_at = [&](int shift, double& zeta, double& dy) {
    zeta = dedekind_zeta2(D, shift);
    dy = bloch_wigner(z);
    if (std::abs(dy) < 1e-12) throw DegenerateWitness("D(sigma(y)) vanishes for y = " + y.str());
    const double pi = std::numbers::pi;
    return zeta * std::sqrt(static_cast<double>(std::labs(D))) / (pi * pi * dy);
  };
  ZagierReport rep;
  rep.D = D;
  rep.y = y.str();
  rep.q = q_at(12, rep.zeta, rep.D_y);
  rep.rational = reconstruct_rational(rep.q, cfg);
  double zeta2 = 0, dy2 = 0;
  const double q2 = q_at(24, zeta2, dy2);
  const auto again = reconstruct_rational(q2, cfg);
  rep.stable = rep.rational && again && *rep.rational == *again;
  return rep;
}

}  // namespace zagier
