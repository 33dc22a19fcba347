#pragma once

#include <array>
#include <functional>
#include <vector>

#include "zagier/hyperlog/iterm.hpp"

namespace zagier {

using Points5 = std::array<PPoint, 5>;
using Points6 = std::array<PPoint, 6>;

// [x]_n = −I(0; 1/x, 0, ..., 0; 1); at n = 1 this is −log(1 − x) = Li1(x).
// DegenerateArgument unless x ∉ {0, 1}.
IComb polylog_embedding(unsigned n, const FieldExpr& x);

// [x, y]_{3,1} = I(0; x, 0, 0, y; 1). DegenerateArgument if x = 0 or y = 1.
ITerm sym_31(const FieldExpr& x, const FieldExpr& y);

// Σ_i h(A_i, A_{i+1}, ..., A_{i−1}).
IComb cycl(const std::function<IComb(const Points5&)>& h, const Points5& pts);

// cycl{[ABCD,BCDE] − [EDCB,EDCA] − 3[ABDC,ABDE] + 3[EDBC,EDBA]}, where ABCD
// is the cross-ratio of the four points. At most one point may be ∞.
IComb build_g(const Points5& pts);

// f with −20 f = g(A..E) − Σ_k g(.. ∞ in slot k ..) − 10 cycl[(B−C)/(B−A)]4
//   − 10 cycl[(A−B)/(A−D)]4 + 10 cycl[(B−A)/(B−D)]4 − 10 cycl[(D−B)/(D−A)]4.
IComb build_f(const Points5& pts);

// I(A; B, C, D, E; F) − f(A, B, C, D, E) + f(B, C, D, E, F).
IComb build_theorem3_discrepancy(const Points6& pts);

struct WeightedArgument {
  FieldExpr arg;
  BigRational coef;
};

// [x] − [y] − [x/y] + [(1−x)/(1−y)] − [(1−1/x)/(1−1/y)].
std::vector<WeightedArgument> build_A(const FieldExpr& x, const FieldExpr& y);

// Σ c_i [a_i, z]_{3,1} over the five arguments of build_A.
IComb build_B(const FieldExpr& x, const FieldExpr& y, const FieldExpr& z);

}  // namespace zagier
