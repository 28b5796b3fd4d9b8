#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gsptri/error.hpp"
#include "gsptri/exact/fraction.hpp"
#include "gsptri/exact/laurent.hpp"
#include "gsptri/exact/matrix.hpp"
#include "gsptri/exact/rational.hpp"

namespace gsptri {

namespace detail {

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

inline LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw InvariantError("Bareiss step produced a non-exact quotient");
  return std::move(*q);
}

inline Fraction exact_quotient(const Fraction& a, const Fraction& b) { return a / b; }

}  // namespace detail

// Fraction-free Gaussian elimination (Bareiss).  Columns are scanned left to
// right; in each column the pivot is the first row at or below the current
// step whose entry is nonzero.  Every division is exact in the coefficient
// ring, so for LaurentPoly input no fractions are ever formed.  Returns the
// rank and, when `det` is non-null and the matrix is square, the determinant.
template <class T>
std::size_t bareiss_rank(Matrix<T> m, T* det = nullptr) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  T prev(1);
  int sign = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t piv = k;
    while (piv < rows && is_zero(m(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != k) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        T num = m(k, c) * m(i, j) - m(i, c) * m(k, j);
        m(i, j) = detail::exact_quotient(num, prev);
      }
      m(i, c) = T{};
    }
    prev = m(k, c);
    ++k;
  }
  if (det) {
    if (rows != cols) throw ArgumentError("determinant of a non-square matrix");
    *det = (k == rows) ? (sign > 0 ? prev : T(-prev)) : T{};
    if (rows == 0) *det = T(1);
  }
  return k;
}

template <class T>
std::size_t rank_over_fraction_field(const Matrix<T>& m) {
  return bareiss_rank(m);
}

template <class T>
T determinant(const Matrix<T>& m) {
  T d{};
  bareiss_rank(m, &d);
  return d;
}

// Gauss-Jordan inverse over a field (Rational or Fraction).
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw ArgumentError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> a(m);
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(a(piv, c))) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    const T p = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = a(c, j) / p;
      inv(c, j) = inv(c, j) / p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      const T f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

using FVector = std::vector<Fraction>;
using LVector = std::vector<LaurentPoly>;

// Incremental row echelon form over the fraction field that remembers how
// every stored row was built from the generators fed to it.
//
// New vectors are reduced against the stored rows in insertion order; the
// pivot of a stored row is its first nonzero coordinate.  Dependent inputs
// are counted as generators but leave no row behind.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t generator_count() const { return generators_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const FVector& row(std::size_t i) const { return rows_.at(i); }

  // True when every pivot so far is a unit of the Laurent ring, i.e. the
  // elimination never left the Laurent ring.
  bool monomial_pivots() const { return monomial_pivots_; }

  // Returns true when v enlarged the span.
  bool add(FVector v) {
    if (v.size() != dim_) throw ArgumentError("span vector has wrong dimension");
    Combo combo{{generators_, Fraction(1)}};
    ++generators_;
    reduce(v, combo, rows_.size());
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) return false;
    if (!v[p].is_monomial()) monomial_pivots_ = false;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    combos_.push_back(std::move(combo));
    return true;
  }

  bool add(const LVector& v) { return add(lift(v)); }

  // Coefficients c (one per generator fed so far) with v = sum_g c_g gen_g,
  // using only the first `row_limit` stored rows; nullopt if v is outside
  // that span.  Generators that never produced a row get coefficient 0.
  std::optional<FVector> express(FVector v, std::size_t row_limit) const {
    if (v.size() != dim_) throw ArgumentError("span vector has wrong dimension");
    row_limit = std::min(row_limit, rows_.size());
    Combo acc;
    for (std::size_t i = 0; i < row_limit; ++i) {
      const Fraction& x = v[pivots_[i]];
      if (x.is_zero()) continue;
      const Fraction f = x / rows_[i][pivots_[i]];
      axpy(v, rows_[i], f);
      add_combo(acc, combos_[i], f);
    }
    for (const auto& x : v)
      if (!x.is_zero()) return std::nullopt;
    FVector coeffs(generators_, Fraction(LaurentPoly(nvars_hint(v))));
    for (auto& [g, c] : acc) coeffs[g] = c;
    return coeffs;
  }

  std::optional<FVector> express(FVector v) const { return express(std::move(v), rows_.size()); }

  static FVector lift(const LVector& v) {
    FVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
  }

 private:
  using Combo = std::map<std::size_t, Fraction>;

  static std::size_t nvars_hint(const FVector& v) {
    std::size_t nv = 0;
    for (const auto& x : v) nv = std::max(nv, x.nvars());
    return nv;
  }

  static void axpy(FVector& v, const FVector& row, const Fraction& f) {
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }

  static void add_combo(Combo& acc, const Combo& src, const Fraction& f) {
    for (const auto& [g, c] : src) {
      auto it = acc.find(g);
      if (it == acc.end()) {
        acc.emplace(g, f * c);
      } else {
        it->second += f * c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }

  void reduce(FVector& v, Combo& combo, std::size_t row_limit) const {
    for (std::size_t i = 0; i < row_limit; ++i) {
      const Fraction& x = v[pivots_[i]];
      if (x.is_zero()) continue;
      const Fraction f = x / rows_[i][pivots_[i]];
      axpy(v, rows_[i], f);
      add_combo(combo, combos_[i], -f);
    }
  }

  std::size_t dim_;
  std::size_t generators_ = 0;
  bool monomial_pivots_ = true;
  std::vector<FVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Combo> combos_;
};

struct MembershipWitness {
  LaurentPoly monomial;             // mu
  std::vector<Fraction> coefficients;  // polynomial in t, one per spanning vector
};

// Smallest monomial mu (componentwise in the exponents) making every
// coefficient a polynomial in the t_tau; coefficients come back multiplied
// by mu.  Returns nullopt if some coefficient is not a Laurent polynomial.
inline std::optional<MembershipWitness> clear_monomials(const FVector& coeffs, std::size_t nvars) {
  Exponent mu = zero_exponent(nvars);
  bool first = true;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    if (!c.is_laurent()) return std::nullopt;
    const Exponent mn = c.as_laurent().promoted(nvars).min_exponent();
    for (std::size_t t = 0; t < nvars; ++t) mu[t] = first ? -mn[t] : std::max(mu[t], -mn[t]);
    first = false;
  }
  MembershipWitness w{LaurentPoly::monomial(mu), {}};
  w.coefficients.reserve(coeffs.size());
  for (const auto& c : coeffs) w.coefficients.push_back(c * Fraction(w.monomial));
  return w;
}

inline std::size_t common_nvars(const LVector& v, const std::vector<LVector>& span) {
  std::size_t nv = 0;
  for (const auto& x : v) nv = std::max(nv, x.nvars());
  for (const auto& s : span)
    for (const auto& x : s) nv = std::max(nv, x.nvars());
  return nv;
}

// Finds mu and polynomial coefficients c with mu*v = sum_i c_i span_i.
// Solving happens over the fraction field; a coefficient whose reduced
// denominator is not a monomial means no monomial multiple of v lies in the
// Laurent span, and the answer is nullopt.  For a dependent span the
// coefficients of redundant vectors are 0.
inline std::optional<MembershipWitness> membership_with_monomial_clearance(
    const LVector& v, const std::vector<LVector>& span) {
  for (const auto& s : span)
    if (s.size() != v.size()) throw ArgumentError("membership: dimension mismatch");
  SpanBuilder sb(v.size());
  for (const auto& s : span) sb.add(s);
  auto coeffs = sb.express(SpanBuilder::lift(v));
  if (!coeffs) return std::nullopt;
  return clear_monomials(*coeffs, common_nvars(v, span));
}

// Re-multiplies a witness: checks mu*v == sum_i c_i span_i structurally.
inline bool verify_witness(const LVector& v, const std::vector<LVector>& span, const MembershipWitness& w) {
  if (w.coefficients.size() != span.size() || !w.monomial.is_monomial()) return false;
  for (const auto& c : w.coefficients)
    if (!c.is_zero() && (!c.is_laurent() || !c.as_laurent().has_nonnegative_exponents())) return false;
  const std::size_t nv = common_nvars(v, span);
  for (std::size_t j = 0; j < v.size(); ++j) {
    LaurentPoly acc(nv);
    for (std::size_t i = 0; i < span.size(); ++i) {
      if (w.coefficients[i].is_zero()) continue;
      if (!w.coefficients[i].is_laurent()) return false;
      acc += w.coefficients[i].as_laurent() * span[i][j];
    }
    if (!(acc == w.monomial * v[j])) return false;
  }
  return true;
}

}  // namespace gsptri
