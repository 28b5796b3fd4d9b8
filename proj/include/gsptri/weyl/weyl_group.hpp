#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "gsptri/config.hpp"
#include "gsptri/error.hpp"
#include "gsptri/exact/matrix.hpp"
#include "gsptri/weyl/permutation.hpp"
#include "gsptri/weyl/symplectic.hpp"

namespace gsptri {

inline bool is_symplectic_perm(const Perm& sigma) {
  if (sigma.empty() || sigma.size() % 2 != 0 || !is_permutation(sigma)) return false;
  const int n = static_cast<int>(sigma.size() / 2);
  for (int i = 1; i <= 2 * n; ++i)
    if (at(sigma, i) + at(sigma, partner(n, i)) != 2 * n + 1) return false;
  return true;
}

// (i,i+1)(2n-i,2n+1-i) for i = 1..n-1, then (n,n+1).
inline std::vector<Perm> weyl_generators(int n) {
  if (n < 1) throw ArgumentError("weyl_generators: n must be positive");
  std::vector<Perm> gens;
  for (int i = 1; i < n; ++i)
    gens.push_back(compose(transposition(2 * n, i, i + 1), transposition(2 * n, 2 * n - i, 2 * n + 1 - i)));
  gens.push_back(transposition(2 * n, n, n + 1));
  return gens;
}

// Signs s with R(sigma(i), i) = s_i.  R^T J R = c J forces
// s_i s_{i'} J_{sigma(i), sigma(i')} = c J_{i, i'} for every i.  With + before -
// the lex-least sign vector has s_1 = ... = s_n = +1 and, of the two tails
// this leaves (one per c), the one starting with +.
inline std::vector<int> weyl_signs(const Perm& sigma, int* similitude_out = nullptr) {
  if (!is_symplectic_perm(sigma)) throw ArgumentError("weyl_representative: not a symplectic permutation " + perm_to_string(sigma));
  const int n = static_cast<int>(sigma.size() / 2);
  auto jsign = [n](int r, int c) { return c == partner(n, r) ? (r <= n ? 1 : -1) : 0; };
  std::vector<int> s(sigma.size(), 1);
  // Tail entry for pair i (i <= n) at c = +1: s_{i'} = J_{i,i'} / J_{sigma(i), sigma(i')}.
  auto tail = [&](int i) { return jsign(i, partner(n, i)) * jsign(at(sigma, i), at(sigma, partner(n, i))); };
  const int c = tail(n) > 0 ? 1 : -1;  // s_{n+1} belongs to pair i = n
  for (int i = 1; i <= n; ++i) s[static_cast<std::size_t>(partner(n, i) - 1)] = c * tail(i);
  if (similitude_out) *similitude_out = c;
  return s;
}

template <class T = Rational>
Matrix<T> signed_matrix(const Perm& sigma, const std::vector<int>& signs) {
  Matrix<T> r(sigma.size(), sigma.size());
  for (std::size_t x = 0; x < sigma.size(); ++x) r(static_cast<std::size_t>(sigma[x] - 1), x) = T(signs[x]);
  return r;
}

template <class T = Rational>
Matrix<T> weyl_representative(const Perm& sigma) {
  return signed_matrix<T>(sigma, weyl_signs(sigma));
}

struct WeylElement {
  int n = 0;
  Perm sigma;
  std::vector<int> signs;
  int similitude = 1;

  static WeylElement from_perm(const Perm& sigma) {
    WeylElement w;
    w.n = static_cast<int>(sigma.size() / 2);
    w.sigma = sigma;
    w.signs = weyl_signs(sigma, &w.similitude);
    return w;
  }

  template <class T = Rational>
  Matrix<T> representative() const { return signed_matrix<T>(sigma, signs); }
};

struct WeylGroup {
  int n = 0;
  std::vector<WeylElement> elements;  // lexicographic in one-line notation
  int closure_depth = 0;              // BFS layers needed from the identity

  std::size_t size() const { return elements.size(); }
};

inline std::size_t hyperoctahedral_order(int n) {
  std::size_t r = 1;
  for (int i = 1; i <= n; ++i) r *= static_cast<std::size_t>(2 * i);
  return r;
}

// Closure of the generators by breadth-first search from the identity.
inline std::vector<Perm> generator_closure(const std::vector<Perm>& gens, int degree, int* depth_out = nullptr) {
  std::set<Perm> seen{identity_perm(degree)};
  std::vector<Perm> frontier{identity_perm(degree)};
  int depth = 0;
  while (true) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Perm q = compose(g, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    if (next.empty()) break;
    ++depth;
    frontier = std::move(next);
  }
  if (depth_out) *depth_out = depth;
  return {seen.begin(), seen.end()};
}

inline WeylGroup weyl_group(int n, int bound = weyl_bound()) {
  if (n < 1) throw ArgumentError("weyl_group: n must be positive");
  if (n > bound)
    throw ResourceError("weyl_group: n = " + std::to_string(n) + " exceeds the configured bound " + std::to_string(bound));
  WeylGroup g;
  g.n = n;
  for (const auto& p : generator_closure(weyl_generators(n), 2 * n, &g.closure_depth))
    g.elements.push_back(WeylElement::from_perm(p));
  return g;
}

// All of S_m in lexicographic order (the GL_m Weyl group).
inline std::vector<Perm> symmetric_group(int m) {
  std::vector<Perm> out;
  Perm p = identity_perm(m);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace gsptri
