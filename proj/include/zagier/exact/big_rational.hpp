#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zagier {

using BigInt = mpz_class;

// Exact rational number, always reduced with a positive denominator.
//
// Values whose numerator and denominator fit in a signed 64-bit word are kept
// inline; anything larger lives in a heap-allocated mpq_class. The
// representation is canonical: a value is stored inline iff it fits, so
// equality and hashing never need to look at both forms.
class BigRational {
 public:
  BigRational() noexcept = default;
  BigRational(int v) noexcept : num_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(long v);                      // NOLINT(google-explicit-constructor)
  BigRational(long long v);                 // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t num, std::int64_t den);
  explicit BigRational(const mpq_class& q);
  explicit BigRational(const mpz_class& z);
  BigRational(const mpz_class& num, const mpz_class& den);

  BigRational(const BigRational& other);
  BigRational(BigRational&& other) noexcept = default;
  BigRational& operator=(const BigRational& other);
  BigRational& operator=(BigRational&& other) noexcept = default;
  ~BigRational() = default;

  // Parses "p", "-p" or "p/q" in base 10. Throws std::invalid_argument.
  static BigRational parse(std::string_view text);

  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const noexcept;

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] mpz_class numerator() const;
  [[nodiscard]] mpz_class denominator() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::size_t hash() const noexcept;

  [[nodiscard]] BigRational abs() const;
  [[nodiscard]] BigRational inverse() const;  // throws std::domain_error on zero

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& a, const BigRational& b) noexcept;
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

 private:
  void assign(const mpq_class& q);
  void assign_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

// Conversions between GMP integers and machine words used throughout the
// exact layer.
mpz_class to_mpz(__int128 v);
bool fits_int64(const mpz_class& z);

}  // namespace zagier

template <>
struct std::hash<zagier::BigRational> {
  std::size_t operator()(const zagier::BigRational& q) const noexcept { return q.hash(); }
};
