#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "gsptri/error.hpp"
#include "gsptri/exact/laurent.hpp"

namespace gsptri {

// Element of the fraction field of the Laurent ring.  Normal form: the
// denominator has no monomial content, leading lex coefficient 1, and is 1
// whenever it divides the numerator.  No general gcd is taken.
class Fraction {
 public:
  Fraction() : num_(), den_(1) {}
  Fraction(const LaurentPoly& num)  // NOLINT(google-explicit-constructor)
      : num_(num), den_(LaurentPoly::constant(num.nvars(), Rational(1))) {}
  Fraction(const Rational& c) : Fraction(LaurentPoly(c)) {}  // NOLINT(google-explicit-constructor)
  Fraction(long c) : Fraction(Rational(c)) {}                // NOLINT(google-explicit-constructor)
  Fraction(int c) : Fraction(Rational(c)) {}                 // NOLINT(google-explicit-constructor)
  Fraction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DomainError("fraction with zero denominator");
    normalize();
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  std::size_t nvars() const { return std::max(num_.nvars(), den_.nvars()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_constant(); }
  // Unit of the Laurent ring viewed inside the fraction field.
  bool is_monomial() const { return is_laurent() && num_.is_monomial(); }

  // The Laurent polynomial this fraction equals; throws if it is not one.
  LaurentPoly as_laurent() const {
    if (!is_laurent()) throw DomainError("fraction is not a Laurent polynomial");
    return num_.scaled(den_.constant_term().inverse());
  }

  Fraction inverse() const {
    if (is_zero()) throw DomainError("inverse of zero fraction");
    return Fraction(den_, num_);
  }

  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
  Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_);
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
  friend Fraction operator-(const Fraction& a) {
    Fraction r(a);
    r.num_ = -r.num_;
    return r;
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    if (a.is_zero() || b.is_zero()) return Fraction(LaurentPoly(std::max(a.nvars(), b.nvars())));
    if (a.is_laurent() && b.is_laurent()) return Fraction(a.as_laurent() * b.as_laurent());
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inverse(); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const {
    if (is_laurent()) return as_laurent().to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

 private:
  void normalize() {
    const std::size_t nv = nvars();
    num_ = num_.promoted(nv);
    den_ = den_.promoted(nv);
    if (num_.is_zero()) {
      den_ = LaurentPoly::constant(nv, Rational(1));
      return;
    }
    if (den_.is_monomial()) {
      num_ = num_ * den_.inverse();
      den_ = LaurentPoly::constant(nv, Rational(1));
      return;
    }
    // Monomials are units: move the denominator's content into the numerator.
    const Exponent md = den_.min_exponent();
    den_ = den_.shifted(-md);
    num_ = num_.shifted(-md);
    const Rational lead = den_.terms().rbegin()->second;
    if (!lead.is_one()) {
      den_ = den_.scaled(lead.inverse());
      num_ = num_.scaled(lead.inverse());
    }
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = LaurentPoly::constant(nv, Rational(1));
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool is_zero(const Fraction& f) { return f.is_zero(); }

}  // namespace gsptri
