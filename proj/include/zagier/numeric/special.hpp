#pragma once

namespace zagier {

// Bernoulli number B_k with B1 = −1/2, k ≤ 60.
double bernoulli(int k);

// Hurwitz ζ(s, a) = Σ_{k≥0} (k + a)^{−s} for real s > 1, a > 0, by
// Euler–Maclaurin after shifting a past `shift`.
double hurwitz_zeta(double s, double a, int shift = 12);

// ζ(s) for integer s ≥ 2.
double zeta_int(int s);

// ψ(x) for x > 0.
double digamma(double x, int shift = 12);

}  // namespace zagier
