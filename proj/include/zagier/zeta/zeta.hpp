#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "zagier/exact/big_rational.hpp"

namespace zagier {

// Kronecker symbol (D / n) for n ≥ 1.
int kronecker(long D, long n);

// D = 1, or D ≡ 1 mod 4 squarefree, or D = 4m with m ≡ 2, 3 mod 4 squarefree.
bool is_fundamental_discriminant(long D);

// Imaginary quadratic field data as in the determinant formula.
struct QuadField {
  long D;
  int r1 = 0, r2 = 1, d2 = 1;

  // InvalidDiscriminant unless D is a negative fundamental discriminant.
  explicit QuadField(long disc);
};

// L(n, χ_D) = |D|^{−n} Σ_{a=1}^{|D|} χ_D(a) ζ(n, a/|D|). Also accepts n = 1
// for D ≠ 1, through the digamma function. `shift` sets the Euler–Maclaurin
// cutoff. InvalidDiscriminant for non-fundamental D.
double dirichlet_L(int n, long D, int shift = 12);

// ζ_F(2) = ζ(2) L(2, χ_D).
double dedekind_zeta2(long D, int shift = 12);

// Element (a + b√D)/c of Q(√D) and its embedding with √D ↦ i√|D|.
struct QuadElement {
  long a = 0, b = 0, c = 1;
  [[nodiscard]] std::complex<double> embed(long D) const;
  [[nodiscard]] std::string str() const;
};

// "i" (needs D = −4), "a,b,c", or "(a + b*sqrt(D))/c" with the literal D.
QuadElement parse_quad_element(const std::string& text, long D);

struct ReconstructionConfig {
  long max_denominator = 10000;
  double tolerance = 1e-8;
};

// Best continued-fraction convergent p/q of x with q ≤ max_denominator and
// |x − p/q| ≤ tolerance.
std::optional<BigRational> reconstruct_rational(double x, const ReconstructionConfig& cfg = {});

struct ZagierReport {
  long D = 0;
  std::string y;
  double zeta = 0;   // ζ_F(2)
  double D_y = 0;    // Bloch–Wigner of σ(y)
  double q = 0;      // ζ_F(2) √|D| / (π² D(σ(y)))
  std::optional<BigRational> rational;
  bool stable = false;  // same rational at doubled precision
};

// Evaluates q at two precision levels and reconstructs. DegenerateWitness
// when D(σ(y)) vanishes.
ZagierReport zagier_check_n2(long D, const QuadElement& y, const ReconstructionConfig& cfg = {});

}  // namespace zagier
