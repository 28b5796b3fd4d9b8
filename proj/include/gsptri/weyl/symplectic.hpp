#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gsptri/error.hpp"
#include "gsptri/exact/fraction.hpp"
#include "gsptri/exact/laurent.hpp"
#include "gsptri/exact/matrix.hpp"
#include "gsptri/exact/rational.hpp"

namespace gsptri {

// x' = 2n + 1 - x, the partner index under the symplectic pairing (1-based).
inline int partner(int n, int x) { return 2 * n + 1 - x; }

// J_{i,2n+1-i} = +1 for i <= n and -1 for i > n; antisymmetric, J^2 = -I.
template <class T = Rational>
Matrix<T> form_matrix(int n) {
  if (n < 1) throw ArgumentError("form_matrix: n must be positive");
  const std::size_t m = static_cast<std::size_t>(2 * n);
  Matrix<T> j(m, m);
  for (int i = 1; i <= 2 * n; ++i)
    j(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(partner(n, i) - 1)) = T(i <= n ? 1 : -1);
  return j;
}

// c with g^T J g = c J, or nullopt (also for c = 0, i.e. singular g).
template <class T>
std::optional<T> similitude(const Matrix<T>& g) {
  if (!g.is_square()) throw ArgumentError("similitude: matrix not square");
  if (g.rows() % 2 != 0) throw ArgumentError("similitude: odd size");
  if (g.rows() == 0) throw ArgumentError("similitude: empty matrix");
  const int n = static_cast<int>(g.rows() / 2);
  const Matrix<T> j = form_matrix<T>(n);
  const Matrix<T> s = g.transpose() * j * g;
  const T c = s(0, g.rows() - 1);
  if (is_zero(c)) return std::nullopt;
  if (!(s == c * j)) return std::nullopt;
  return c;
}

namespace detail {
inline Rational unit_inverse(const Rational& x) {
  if (x.is_zero()) throw ArgumentError("torus_embed: zero entry");
  return x.inverse();
}
inline LaurentPoly unit_inverse(const LaurentPoly& x) {
  if (!x.is_monomial()) throw ArgumentError("torus_embed: entry is not a unit of the Laurent ring");
  return x.inverse();
}
}  // namespace detail

// diag(t_1, ..., t_n, t_n^{-1} t_{n+1}, ..., t_1^{-1} t_{n+1}).
template <class T>
Matrix<T> torus_embed(const std::vector<T>& t) {
  if (t.size() < 2) throw ArgumentError("torus_embed: need n+1 >= 2 entries");
  const std::size_t n = t.size() - 1;
  std::vector<T> d(2 * n);
  const T last = t[n];
  detail::unit_inverse(last);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = t[i];
    d[2 * n - 1 - i] = detail::unit_inverse(t[i]) * last;
  }
  return Matrix<T>::diagonal(d);
}

// Basis element of gsp_{2n}.  pair = (a, b) with a <= b (1-based) for
// -J * S_ab, where S_ab = e_ab + e_ba (a < b) or e_aa; pair = (0, 0) for the
// identity.  The support is {(a', b), (b', a)} and both positions lie on the
// diagonal band b - a' = a + b - (2n+1).
struct GspBasisElement {
  int a = 0;
  int b = 0;
  bool is_identity() const { return a == 0; }
  int band(int n) const { return is_identity() ? 0 : a + b - (2 * n + 1); }
  bool strictly_lower(int n) const { return !is_identity() && band(n) < 0; }
};

// Identity first, then the pairs a <= b in lexicographic order.
inline std::vector<GspBasisElement> gsp_basis_labels(int n) {
  if (n < 1) throw ArgumentError("gsp_lie_basis: n must be positive");
  std::vector<GspBasisElement> out{{0, 0}};
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = a; b <= 2 * n; ++b) out.push_back({a, b});
  return out;
}

template <class T = Rational>
Matrix<T> gsp_basis_matrix(int n, const GspBasisElement& e) {
  const std::size_t m = static_cast<std::size_t>(2 * n);
  if (e.is_identity()) return Matrix<T>::identity(m);
  Matrix<T> s(m, m);
  s(static_cast<std::size_t>(e.a - 1), static_cast<std::size_t>(e.b - 1)) = T(1);
  s(static_cast<std::size_t>(e.b - 1), static_cast<std::size_t>(e.a - 1)) = T(1);
  return -(form_matrix<T>(n) * s);
}

template <class T = Rational>
std::vector<Matrix<T>> gsp_lie_basis(int n) {
  std::vector<Matrix<T>> out;
  for (const auto& e : gsp_basis_labels(n)) out.push_back(gsp_basis_matrix<T>(n, e));
  return out;
}

// True iff X^T J + J X = c J for some c.
template <class T>
bool in_gsp(const Matrix<T>& x) {
  const int n = static_cast<int>(x.rows() / 2);
  const Matrix<T> j = form_matrix<T>(n);
  const Matrix<T> s = x.transpose() * j + j * x;
  const T c = s(0, x.rows() - 1);
  return s == c * j;
}

// Coordinates of X in gsp_lie_basis order.  The identity coefficient is
// (X_11 + X_{2n,2n}) / 2; the rest is read off position (a', b) of X - cI.
template <class T>
std::vector<T> gsp_coordinates(int n, const Matrix<T>& x) {
  const std::size_t m = static_cast<std::size_t>(2 * n);
  if (x.rows() != m || x.cols() != m) throw ArgumentError("gsp_coordinates: wrong size");
  const T half_c = (x(0, 0) + x(m - 1, m - 1)) * T(Rational(1, 2));
  std::vector<T> out{half_c};
  for (const auto& e : gsp_basis_labels(n)) {
    if (e.is_identity()) continue;
    const int r = partner(n, e.a);
    const std::size_t ri = static_cast<std::size_t>(r - 1);
    const std::size_t ci = static_cast<std::size_t>(e.b - 1);
    T v = x(ri, ci);
    if (ri == ci) v -= half_c;
    // Entry of -J S_ab at (a', b) is -J_{a',a}: +1 for a <= n, -1 otherwise.
    out.push_back(e.a <= n ? v : T(-v));
  }
  return out;
}

}  // namespace gsptri
