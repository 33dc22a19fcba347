#pragma once

#include <optional>

#include "zagier/exact/multi_poly.hpp"

namespace zagier {

// Greatest common divisor in primitive normal form (integer coefficients
// with gcd 1, positive leading coefficient). Constant gcds are reported as 1.
// Throws std::invalid_argument when both inputs are zero.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

// Primitive integer polynomial with positive leading coefficient and the
// rational factor removed from p to get it (p == factor * result).
struct PrimitiveSplit {
  BigRational factor;
  MultiPoly primitive;
};
PrimitiveSplit primitive_split(const MultiPoly& p);

namespace gcd_detail {

// Modular certificate of coprimality for primitive integer polynomials. A
// true result is a proof; false means "could not certify".
bool certify_coprime(const MultiPoly& a, const MultiPoly& b);

// Heuristic GCD by integer evaluation and xi-adic reconstruction, verified by
// exact trial division. Inputs are integer polynomials; the result keeps
// the integer content gcd. nullopt when the heuristic gives up.
std::optional<MultiPoly> gcd_heuristic(const MultiPoly& a, const MultiPoly& b);

// Recursive primitive polynomial remainder sequence. Slow, always succeeds.
MultiPoly gcd_prs(const MultiPoly& a, const MultiPoly& b);

}  // namespace gcd_detail

}  // namespace zagier
