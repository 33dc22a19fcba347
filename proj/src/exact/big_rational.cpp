#include "zagier/exact/big_rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace zagier {
namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

unsigned __int128 uabs128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) { return v <= kMax && v >= -kMax; }

}  // namespace

mpz_class to_mpz(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = uabs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits_int64(const mpz_class& z) {
  // Excludes INT64_MIN so negation of an inline value never overflows.
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
}

BigRational::BigRational(long v) : BigRational(static_cast<long long>(v)) {}

BigRational::BigRational(long long v) {
  if (v == std::numeric_limits<long long>::min()) {
    assign(mpq_class(mpz_class(std::to_string(v))));
  } else {
    num_ = v;
  }
}

BigRational::BigRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  assign_wide(num, den);
}

BigRational::BigRational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  assign(c);
}

BigRational::BigRational(const mpz_class& z) { assign(mpq_class(z)); }

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  assign(q);
}

BigRational::BigRational(const BigRational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

BigRational& BigRational::operator=(const BigRational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return BigRational(q);
}

void BigRational::assign(const mpq_class& q) {
  if (fits_int64(q.get_num()) && fits_int64(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(q);
  }
}

void BigRational::assign_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  unsigned __int128 g = gcd128(uabs128(num), static_cast<unsigned __int128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
  }
}

bool BigRational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int BigRational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class BigRational::to_mpq() const {
  if (big_) return *big_;
  return {mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
}

mpz_class BigRational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class BigRational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

double BigRational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string BigRational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t BigRational::hash() const noexcept {
  if (!big_) {
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const mpz_t z) {
    const std::size_t n = mpz_size(z);
    for (std::size_t i = 0; i < n; ++i) h = (h ^ mpz_getlimbn(z, static_cast<mp_size_t>(i))) * 0x100000001b3ULL;
    h ^= static_cast<std::size_t>(mpz_sgn(z) + 2);
  };
  mix(big_->get_num_mpz_t());
  mix(big_->get_den_mpz_t());
  return h;
}

BigRational BigRational::abs() const { return sign() < 0 ? -*this : *this; }

BigRational BigRational::inverse() const {
  if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
  if (!big_) return {den_, num_};
  return BigRational(mpq_class(1) / *big_);
}

BigRational BigRational::operator-() const {
  BigRational r;
  if (big_) {
    r.big_ = std::make_unique<mpq_class>(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      assign_wide(static_cast<__int128>(num_) + rhs.num_, 1);
    } else {
      assign_wide(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                  static_cast<__int128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign(to_mpq() + rhs.to_mpq());
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  if (!big_ && !rhs.big_) {
    assign_wide(static_cast<__int128>(num_) * rhs.den_ - static_cast<__int128>(rhs.num_) * den_,
                static_cast<__int128>(den_) * rhs.den_);
    return *this;
  }
  assign(to_mpq() - rhs.to_mpq());
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  if (!big_ && !rhs.big_) {
    assign_wide(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
    return *this;
  }
  assign(to_mpq() * rhs.to_mpq());
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
  if (!big_ && !rhs.big_) {
    assign_wide(static_cast<__int128>(num_) * rhs.den_, static_cast<__int128>(den_) * rhs.num_);
    return *this;
  }
  assign(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const BigRational& a, const BigRational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical representation: differing forms differ in value
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  if (!a.big_ && !b.big_) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.str(); }

}  // namespace zagier
