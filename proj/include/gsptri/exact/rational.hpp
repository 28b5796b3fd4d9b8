#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "gsptri/error.hpp"

namespace gsptri {

// Arbitrary precision rational number, always in lowest terms with a
// positive denominator.  Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& num) : v_(num) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "a" or "a/b" with optional sign.
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ArgumentError("empty rational literal");
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpz_class(s, 10));
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den(s.substr(slash + 1), 10);
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      throw ArgumentError("malformed rational literal '" + s + "'");
    }
  }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
  }

  // "a/b", with "/b" omitted when b = 1.
  std::string to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_{0};
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

// Deterministic trial division; the primes in play are tiny.
inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// v with x = p^v * (unit of Z_(p)).
inline long padic_valuation(const Rational& x, std::int64_t p) {
  if (!is_prime(p)) throw ArgumentError("padic_valuation: " + std::to_string(p) + " is not prime");
  if (x.is_zero()) throw DomainError("padic_valuation of zero");
  mpz_class prime(static_cast<long>(p));
  mpz_class rest;
  mpz_class num = x.numerator();
  mpz_class den = x.denominator();
  const long up = static_cast<long>(mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t()));
  const long down = static_cast<long>(mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t()));
  return up - down;
}

}  // namespace gsptri
