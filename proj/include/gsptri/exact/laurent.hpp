#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gsptri/error.hpp"
#include "gsptri/exact/rational.hpp"

namespace gsptri {

using Exponent = std::vector<int>;

inline Exponent zero_exponent(std::size_t nvars) { return Exponent(nvars, 0); }

inline Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Exponent operator-(const Exponent& a) {
  Exponent r(a);
  for (auto& x : r) x = -x;
  return r;
}

inline long total_degree(const Exponent& e) {
  long d = 0;
  for (int x : e) d += x;
  return d;
}

// Multivariate Laurent polynomial over Q in the variables t_0, ..., t_{n-1}
// (one per embedding tau).  Terms live in a map keyed by exponent vector, so
// iteration is in lexicographic exponent order and equality is structural.
// Zero coefficients are never stored.
//
// A polynomial with nvars() == 0 is a bare constant; it is promoted on
// contact with a polynomial in more variables, which lets value-initialised
// matrices of LaurentPoly act as zero matrices.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}
  LaurentPoly(const Rational& c)  // NOLINT(google-explicit-constructor)
      : nvars_(0) {
    if (!c.is_zero()) terms_.emplace(Exponent{}, c);
  }
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static LaurentPoly constant(std::size_t nvars, const Rational& c) {
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(zero_exponent(nvars), c);
    return p;
  }

  static LaurentPoly monomial(const Exponent& e, const Rational& c = Rational(1)) {
    LaurentPoly p(e.size());
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
  }

  static LaurentPoly variable(std::size_t nvars, std::size_t index, int power = 1) {
    Exponent e = zero_exponent(nvars);
    e.at(index) = power;
    return monomial(e);
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }
  // A unit of the Laurent ring: nonzero scalar times a monomial.
  bool is_monomial() const { return terms_.size() == 1; }

  Rational constant_term() const {
    auto it = terms_.find(zero_exponent(nvars_));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Exponent& monomial_exponent() const {
    if (!is_monomial()) throw ArgumentError("not a monomial");
    return terms_.begin()->first;
  }
  const Rational& monomial_coefficient() const {
    if (!is_monomial()) throw ArgumentError("not a monomial");
    return terms_.begin()->second;
  }

  // Componentwise minimum exponent over all terms (the largest monomial
  // dividing every term).  Requires a nonzero polynomial.
  Exponent min_exponent() const {
    if (is_zero()) throw DomainError("min_exponent of zero polynomial");
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
  }

  bool has_nonnegative_exponents() const {
    for (const auto& [e, c] : terms_)
      for (int x : e)
        if (x < 0) return false;
    return true;
  }

  LaurentPoly promoted(std::size_t nvars) const {
    if (nvars_ == nvars) return *this;
    if (nvars_ != 0) throw ArgumentError("Laurent polynomials over different variable sets");
    return constant(nvars, constant_term());
  }

  LaurentPoly shifted(const Exponent& by) const {
    LaurentPoly r(by.size());
    const LaurentPoly self = promoted(by.size());
    for (const auto& [e, c] : self.terms_) r.terms_.emplace_hint(r.terms_.end(), e + by, c);
    return r;
  }

  LaurentPoly scaled(const Rational& s) const {
    if (s.is_zero()) return LaurentPoly(nvars_);
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
    return r;
  }

  // Inverse in the Laurent ring; only monomials are invertible.
  LaurentPoly inverse() const {
    if (!is_monomial()) throw ArgumentError("non-invertible Laurent polynomial");
    return monomial(-terms_.begin()->first, terms_.begin()->second.inverse());
  }

  // Substitution t_i -> point[i] (all point entries nonzero).
  Rational evaluate(std::span<const Rational> point) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) term *= point[i].pow(e[i]);
      acc += term;
    }
    return acc;
  }

  // Exact quotient in the Laurent ring, or nullopt when `d` does not divide.
  // Both sides are normalised to polynomials without monomial content; t_i is
  // prime in Q[t], so divisibility is then decided by ordinary division by a
  // single polynomial under lex order.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    const std::size_t nv = std::max(nvars_, d.nvars_);
    const LaurentPoly num = promoted(nv);
    const LaurentPoly den = d.promoted(nv);
    if (num.is_zero()) return LaurentPoly(nv);
    if (den.is_monomial()) return num * den.inverse();
    const Exponent mn = num.min_exponent();
    const Exponent md = den.min_exponent();
    LaurentPoly rem = num.shifted(-mn);
    const LaurentPoly div = den.shifted(-md);
    const auto& [lead_e, lead_c] = *div.terms_.rbegin();
    LaurentPoly quot(nv);
    while (!rem.is_zero()) {
      const auto& [re, rc] = *rem.terms_.rbegin();
      Exponent q = re - lead_e;
      if (std::any_of(q.begin(), q.end(), [](int x) { return x < 0; })) return std::nullopt;
      const Rational qc = rc / lead_c;
      quot.terms_.emplace(q, qc);
      rem -= div.shifted(q).scaled(qc);
    }
    return quot.shifted(mn - md);
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, Rational(1)); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, Rational(-1)); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return a.scaled(Rational(-1)); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    const std::size_t nv = std::max(a.nvars_, b.nvars_);
    if (a.is_zero() || b.is_zero()) return LaurentPoly(nv);
    const LaurentPoly x = a.promoted(nv);
    const LaurentPoly y = b.promoted(nv);
    if (y.is_constant()) return x.scaled(y.constant_term());
    if (x.is_constant()) return y.scaled(x.constant_term());
    LaurentPoly r(nv);
    for (const auto& [ea, ca] : x.terms_) {
      for (const auto& [eb, cb] : y.terms_) {
        Exponent e = ea + eb;
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
          r.terms_.emplace(std::move(e), ca * cb);
        } else {
          it->second += ca * cb;
          if (it->second.is_zero()) r.terms_.erase(it);
        }
      }
    }
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
    if (a.nvars_ != 0 && b.nvars_ != 0) return false;
    const std::size_t nv = std::max(a.nvars_, b.nvars_);
    return a.promoted(nv).terms_ == b.promoted(nv).terms_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.to_string();
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) os << "*t" << i << (e[i] != 1 ? "^" + std::to_string(e[i]) : "");
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

 private:
  LaurentPoly& accumulate(const LaurentPoly& o, const Rational& sign) {
    if (o.is_zero()) {
      if (nvars_ == 0) nvars_ = o.nvars_;
      else if (o.nvars_ != 0 && o.nvars_ != nvars_)
        throw ArgumentError("Laurent polynomials over different variable sets");
      return *this;
    }
    const std::size_t nv = std::max(nvars_, o.nvars_);
    if (nvars_ != nv) *this = promoted(nv);
    const LaurentPoly other = o.promoted(nv);
    for (const auto& [e, c] : other.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_.emplace(e, sign.is_one() ? c : c * sign);
      } else {
        it->second += sign.is_one() ? c : c * sign;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

}  // namespace gsptri
