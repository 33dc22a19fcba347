#pragma once

#include "zagier/hyperlog/iterm.hpp"
#include "zagier/mult/tensor.hpp"

namespace zagier {

// log(a − b) in F*⊗Q, memoized process-wide. A vanishing difference or one
// involving ∞ contributes nothing (the regularized log 0 = 0 and the
// projective factor-dropping rule).
MultElement log_difference(const PPoint& a, const PPoint& b);

// Class of the weight-1 integral I(a; b; c): log(c − b) − log(a − b).
MultElement weight_one_log(const ITerm& t);

// Symbol by the entry-wise recursion
//   S(I(a0; a1..an; a_end)) = Σ_i S(I(..âi..)) ⊗ (log(ai − ai+1) − log(ai − ai−1)).
// Outside regularized mode, a0 = a1 or an = a_end raises DivergentTerm.
TensorElement symbol(const ITerm& t, bool regularized = false);

// Term-parallel expansion (OpenMP) and the serial reference it is tested
// against. Both return identical canonical tensors.
TensorElement symbol(const IComb& c, bool regularized = false);
TensorElement symbol_serial(const IComb& c, bool regularized = false);

// Computes every difference log the combination needs, serially, so that
// atom ids do not depend on thread scheduling.
void prepare_logs(const IComb& c);

// ρ(x1..xn) = ρ(x1..xn−1)⊗xn − ρ(x2..xn)⊗x1, ρ(x) = x. Kills shuffles.
TensorElement rho_project(const TensorElement& s);

}  // namespace zagier
