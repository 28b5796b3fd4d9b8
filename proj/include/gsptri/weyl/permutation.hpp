#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gsptri/error.hpp"
#include "gsptri/exact/matrix.hpp"

namespace gsptri {

// One-line notation, 1-based: p[i-1] = p(i).
using Perm = std::vector<int>;

inline Perm identity_perm(int m) {
  Perm p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int x : p) {
    if (x < 1 || x > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

// (a o b)(i) = a(b(i)).
inline Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw ArgumentError("composing permutations of different degree");
  Perm r(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return r;
}

inline Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return r;
}

// Transposition (i j) in S_m.
inline Perm transposition(int m, int i, int j) {
  Perm p = identity_perm(m);
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(j - 1)]);
  return p;
}

inline int at(const Perm& p, int i) { return p[static_cast<std::size_t>(i - 1)]; }

// Permutation matrix with P(w) e_x = e_{w(x)}, so P(v)P(w) = P(v o w).
template <class T = Rational>
Matrix<T> permutation_matrix(const Perm& p) {
  Matrix<T> m(p.size(), p.size());
  for (std::size_t x = 0; x < p.size(); ++x) m(static_cast<std::size_t>(p[x] - 1), x) = T(1);
  return m;
}

inline std::string perm_to_string(const Perm& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

}  // namespace gsptri
