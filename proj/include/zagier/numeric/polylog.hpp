#pragma once

#include "zagier/numeric/complex_val.hpp"

namespace zagier {

// Li_n on the principal branch (cut [1, ∞)). Series for |z| ≤ 1/2, the
// expansion in log z for 1/2 < |z| < 2, inversion beyond.
// BranchAmbiguity for real z > 1; DegenerateArgument for Li_1(1).
ComplexVal li_n(int n, const ComplexVal& z);

// Single-valued R_n(Σ_{k<n} B_k/k! log^k(z z̄) Li_{n−k}(z)) with B1 = −1/2:
// imaginary part for even n, real part for odd n. Continuous at z = 1.
// DegenerateArgument at z = 0.
double svp(int n, std::complex<double> z);

// Im Li2(z) + log|z| arg(1 − z).
double bloch_wigner(std::complex<double> z);

// Largest jump of the principal-branch svp formula across the cut (1, ∞),
// sampled where loops around 1 cross it; rounding-level if single-valued.
double svp_monodromy_residual(int n, double radius = 0.5, int samples = 64);

}  // namespace zagier
