#pragma once

#include <complex>
#include <vector>

#include "zagier/numeric/complex_val.hpp"

namespace zagier {

using cplx = std::complex<double>;

// Piecewise-straight integration contour.
class Path {
 public:
  explicit Path(std::vector<cplx> waypoints);
  static Path straight(cplx from, cplx to) { return Path({from, to}); }
  // Straight path with a rectangular detour to the left of every singularity
  // lying within `clearance` of it, at radius max(1e−2, |to − from|/10).
  // Singularities closer than twice the radius share a detour.
  static Path avoiding(cplx from, cplx to, const std::vector<cplx>& singularities, double clearance = 1e-3);

  [[nodiscard]] const std::vector<cplx>& waypoints() const noexcept { return pts_; }
  [[nodiscard]] cplx start() const { return pts_.front(); }
  [[nodiscard]] cplx end() const { return pts_.back(); }

 private:
  std::vector<cplx> pts_;
};

// Numeric hyperlogarithm I(a0; a1..an; a_end) along `path` (which must run
// from a0 to a_end), from the triangular system dF_k = F_{k−1} dt/(t − a_k)
// solved panel by panel with Gauss–Legendre collocation.
// DivergentTerm if a0 = a1 or an = a_end; PathError if the path passes within
// `clearance` of some a_k away from its endpoints.
ComplexVal iterated_integral_num(cplx a0, const std::vector<cplx>& word, cplx end, const Path& path,
                                 double clearance = 1e-3);
// Straight path.
ComplexVal iterated_integral_num(cplx a0, const std::vector<cplx>& word, cplx end);

// |I(w1) I(w2) − Σ I(shuffle(w1, w2))| along the path.
double shuffle_check_num(const std::vector<cplx>& w1, const std::vector<cplx>& w2, cplx a0, cplx end,
                         const Path& path);

}  // namespace zagier
