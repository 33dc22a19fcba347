#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zagier/exact/multi_poly.hpp"

namespace zagier {

// Exponent vector over atom indices of a CoprimeBasis, sorted by index.
using AtomExponents = std::vector<std::pair<std::uint32_t, long>>;

// Incrementally maintained gcd-free basis. Atoms are positive integers > 1
// and primitive non-constant integer polynomials with positive leading
// coefficient; active atoms are pairwise coprime. Inserting a new element can
// split an existing atom, which then becomes retired: its index stays valid
// and resolves to the exponents of its factors.
//
// Not synchronized; see AtomRegistry for the shared, locked wrapper.
class CoprimeBasis {
 public:
  using Index = std::uint32_t;

  // Decomposes a nonzero polynomial into active atoms, up to sign. Rational
  // content is expressed through integer atoms (small primes are split off
  // by trial division, the rest refined by gcd).
  AtomExponents insert(const MultiPoly& p);

  // Rewrites exponents over retired atoms in terms of active ones.
  [[nodiscard]] AtomExponents resolve(const AtomExponents& e) const;

  [[nodiscard]] const MultiPoly& atom(Index i) const { return atoms_[i]; }
  [[nodiscard]] bool retired(Index i) const { return split_[i].has_value(); }
  [[nodiscard]] std::size_t size() const { return atoms_.size(); }
  [[nodiscard]] std::size_t retired_count() const { return retired_count_; }
  [[nodiscard]] std::vector<Index> active() const;

 private:
  AtomExponents insert_integer(mpz_class n);
  AtomExponents insert_big_integer(mpz_class n);
  AtomExponents insert_primitive(MultiPoly x);
  Index add_atom(MultiPoly p);
  void retire(Index i, AtomExponents parts);

  std::vector<MultiPoly> atoms_;
  std::vector<std::optional<AtomExponents>> split_;
  std::unordered_map<MultiPoly, Index> index_;
  std::unordered_map<MultiPoly, AtomExponents> cache_;
  std::vector<Index> active_polys_;
  std::vector<Index> active_big_ints_;
  std::size_t retired_count_ = 0;
};

AtomExponents add_exponents(const AtomExponents& a, const AtomExponents& b, long scale_b = 1);

struct FactorRefinement {
  std::vector<MultiPoly> basis;             // deterministic order (poly_less)
  std::vector<std::vector<long>> exponents;  // one row per input, one column per basis element
  std::vector<BigRational> units;           // input[i] == units[i] * prod basis^exponents[i]
};

// Coprime basis of a list of nonzero polynomials. Throws
// std::invalid_argument on a zero input.
FactorRefinement factor_refine(std::span<const MultiPoly> inputs);

}  // namespace zagier
