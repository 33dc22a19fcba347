#pragma once

#include <span>
#include <vector>

#include "zagier/hyperlog/symbol.hpp"

namespace zagier {

// Commutative product of iterated integrals; empty means 1.
using IProduct = std::vector<ITerm>;

struct CoproductTerm {
  BigRational coef;
  std::vector<IProduct> factors;  // one per part of the shape
};
using CoproductExpansion = std::vector<CoproductTerm>;

// Component of the iterated coproduct with the given weak composition of the
// weight, from the subsequence formula
//   Δ I(a0; a1..an; a_end) = Σ I(a0; a_i1..a_ik; a_end) ⊗ Π_p I(a_ip; a_ip+1..; a_ip+1),
// applied repeatedly to the left factor. Parts of weight 0 are units.
CoproductExpansion coproduct_component(const ITerm& t, std::span<const unsigned> shape);
// Same for a product, using multiplicativity of Δ.
CoproductExpansion coproduct_component(const IProduct& p, std::span<const unsigned> shape);

// Symbol of a product (shuffle of the factor symbols), regularized.
TensorElement symbol(const IProduct& p);
// Image of an expansion under S ⊗ ... ⊗ S, slots concatenated.
TensorElement symbol_image(const CoproductExpansion& e);

// Cobracket components modulo products. Signs are fixed so that
// δ2[x]2 = (1−x)∧x and δ_{n−1,1}[x]n = [x]_{n−1}⊗x; the chain of [x]4 is then
// (1−x)∧x⊗x⊗x. With a∧b = a⊗b − b⊗a this makes δ2 = τΔ' − Δ' but
// δ_{n−1,1} = Δ' − τΔ'.
struct SplitTerm {
  BigRational coef;
  ITerm left;   // weight n−1
  ITerm right;  // weight 1
};
// (n−1, 1) part for n ≥ 3.
std::vector<SplitTerm> delta_n1(const ITerm& t);
// Weight 2 to Λ²(F*⊗Q).
WedgeTensor delta2(const ITerm& t);
WedgeTensor delta2(const IComb& c);

// (δ2 ⊗ id ⊗ id)(δ21 ⊗ id)δ31 on weight 4, valued in Λ² ⊗ T ⊗ T.
// Throws DivergentTerm on a divergent input term unless regularized.
WedgeChainElement cobracket_chain(const ITerm& t, bool regularized = false);
WedgeChainElement cobracket_chain(const IComb& c, bool regularized = false);
WedgeChainElement cobracket_chain_serial(const IComb& c, bool regularized = false);

// (2,2) component in Λ²H2, as (coef, R, L) meaning coef · R∧L.
struct WedgePairTerm {
  BigRational coef;
  ITerm first;
  ITerm second;
};
std::vector<WedgePairTerm> delta22(const ITerm& t);
// δ22 pushed through δ2⊗δ2 into Λ²⊗Λ², with each Λ² embedded in T² by
// a∧b ↦ a⊗b − b⊗a.
TensorElement delta22_pushed(const ITerm& t);
TensorElement delta22_pushed(const IComb& c);

}  // namespace zagier
