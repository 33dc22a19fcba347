#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zagier/exact/big_rational.hpp"
#include "zagier/exact/multi_poly.hpp"
#include "zagier/mult/atom_registry.hpp"

namespace zagier {

// Outcome of an exact zero test: the number of surviving canonical terms and
// a deterministic rendered sample of them.
struct ZeroCheck {
  bool zero = true;
  std::size_t residual_count = 0;
  std::vector<std::string> sample;
};

// Element of F*⊗Q written additively: a sparse exponent vector over registry
// atoms, sorted by id. Signs and roots of unity are zero here.
class MultElement {
 public:
  using Entry = std::pair<AtomId, BigRational>;

  MultElement() = default;
  static MultElement atom(AtomId id, BigRational e = BigRational(1));
  static MultElement from_exponents(const AtomExponents& e);

  // Entries with every retired atom expanded. Cheap when nothing was split
  // since construction.
  [[nodiscard]] MultElement canonical() const;
  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
  [[nodiscard]] bool is_identity() const { return canonical().entries_.empty(); }

  MultElement& operator+=(const MultElement& rhs);
  MultElement& operator-=(const MultElement& rhs);
  friend MultElement operator+(MultElement a, const MultElement& b) { return a += b; }
  friend MultElement operator-(MultElement a, const MultElement& b) { return a -= b; }
  MultElement operator-() const;
  [[nodiscard]] MultElement scaled(const BigRational& c) const;

  friend bool operator==(const MultElement& a, const MultElement& b);

  [[nodiscard]] std::string str() const;

 private:
  static MultElement raw_atom(AtomId id, BigRational c, std::size_t gen);
  static MultElement combine(const MultElement& a, const MultElement& b, const BigRational& scale_b);

  std::vector<Entry> entries_;
  std::size_t generation_ = 0;
};

// log(num/den) in F*⊗Q. Throws DegenerateArgument on a zero input.
MultElement mult_from_ratio(const MultiPoly& num, const MultiPoly& den);
MultElement mult_from_poly(const MultiPoly& p);

ZeroCheck is_zero(const MultElement& e, std::size_t sample_limit = 10);

}  // namespace zagier
