#pragma once

#include <complex>
#include <limits>

namespace zagier {

// Complex double with a running bound on its absolute error.
struct ComplexVal {
  std::complex<double> v;
  double err = 0;

  ComplexVal() = default;
  ComplexVal(std::complex<double> value, double error = 0) : v(value), err(error) {}  // NOLINT
  ComplexVal(double re, double im = 0, double error = 0) : v(re, im), err(error) {}     // NOLINT

  [[nodiscard]] double re() const noexcept { return v.real(); }
  [[nodiscard]] double im() const noexcept { return v.imag(); }
  [[nodiscard]] double abs() const noexcept { return std::abs(v); }

  friend ComplexVal operator+(const ComplexVal& a, const ComplexVal& b) {
    const auto s = a.v + b.v;
    return {s, a.err + b.err + kEps * std::abs(s)};
  }
  friend ComplexVal operator-(const ComplexVal& a, const ComplexVal& b) {
    const auto s = a.v - b.v;
    return {s, a.err + b.err + kEps * std::abs(s)};
  }
  friend ComplexVal operator*(const ComplexVal& a, const ComplexVal& b) {
    const auto p = a.v * b.v;
    return {p, std::abs(a.v) * b.err + std::abs(b.v) * a.err + a.err * b.err + kEps * std::abs(p)};
  }
  friend ComplexVal operator/(const ComplexVal& a, const ComplexVal& b) {
    const double m = std::abs(b.v);
    const auto q = a.v / b.v;
    // First-order bound, valid while b.err is well below |b|.
    return {q, (a.err + std::abs(q) * b.err) / (m - b.err > 0 ? m - b.err : m) + kEps * std::abs(q)};
  }
  ComplexVal operator-() const { return {-v, err}; }

  static constexpr double kEps = std::numeric_limits<double>::epsilon();
};

}  // namespace zagier
