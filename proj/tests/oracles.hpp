#pragma once
// Independent brute-force references.  Nothing here calls the routine it is
// used to check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "gsptri/gsptri.hpp"

namespace oracle {

using gsptri::Perm;
using gsptri::Rational;

// Rank by plain rational row reduction, pivoting on the last nonzero entry
// of each column (the library takes the first).
inline std::size_t naive_rank(gsptri::QMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<bool> used(rows, false);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::optional<std::size_t> piv;
    for (std::size_t r = 0; r < rows; ++r)
      if (!used[r] && !a(r, c).is_zero()) piv = r;
    if (!piv) continue;
    used[*piv] = true;
    ++rank;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == *piv || a(r, c).is_zero()) continue;
      const Rational f = a(r, c) / a(*piv, c);
      for (std::size_t j = 0; j < cols; ++j) a(r, j) -= f * a(*piv, j);
    }
  }
  return rank;
}

// Determinant by Laplace expansion along the first row.
inline Rational laplace_det(const gsptri::QMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return a(0, 0);
  Rational d(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c).is_zero()) continue;
    gsptri::QMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = a(r, k);
    const Rational term = a(0, c) * laplace_det(minor);
    d += (c % 2 == 0) ? term : -term;
  }
  return d;
}

inline std::vector<Perm> all_perms(int m) {
  std::vector<Perm> out;
  Perm p(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// {sigma in S_2n : sigma(i) + sigma(2n+1-i) = 2n+1}.
inline std::set<Perm> symplectic_perms(int n) {
  std::set<Perm> out;
  for (const auto& p : all_perms(2 * n)) {
    bool ok = true;
    for (int i = 1; i <= 2 * n && ok; ++i) ok = p[i - 1] + p[2 * n - i] == 2 * n + 1;
    if (ok) out.insert(p);
  }
  return out;
}

inline gsptri::QMatrix form(int n) {
  gsptri::QMatrix j(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(i, 2 * n - 1 - i) = Rational(1);
    j(2 * n - 1 - i, i) = Rational(-1);
  }
  return j;
}

struct SignedRep {
  std::vector<int> signs;
  int similitude = 0;
};

// Lexicographically least sign vector (+ before -) whose signed permutation
// matrix R(sigma(i), i) = s_i is a symplectic similitude.
inline std::optional<SignedRep> least_signs(const Perm& sigma) {
  const int m = static_cast<int>(sigma.size());
  const int n = m / 2;
  const auto j = form(n);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> s(static_cast<std::size_t>(m));
    // bit (m-1-x) set means s_x = -1, so increasing masks run in lex order.
    for (int x = 0; x < m; ++x) s[static_cast<std::size_t>(x)] = (mask >> (m - 1 - x)) & 1u ? -1 : 1;
    gsptri::QMatrix r(m, m);
    for (int x = 0; x < m; ++x) r(sigma[x] - 1, x) = Rational(s[static_cast<std::size_t>(x)]);
    const auto g = r.transpose() * j * r;
    for (int c : {1, -1})
      if (g == Rational(c) * j) return SignedRep{s, c};
  }
  return std::nullopt;
}

// Lex-least member of the orbit {(d_w(1), ..., d_w(m)) : w in W}.
inline std::vector<int> greedy_lexmin(const std::vector<int>& d, const std::vector<Perm>& weyl) {
  std::vector<int> best;
  for (const auto& w : weyl) {
    std::vector<int> seq;
    for (int x : w) seq.push_back(d[static_cast<std::size_t>(x - 1)]);
    if (best.empty() || seq < best) best = seq;
  }
  return best;
}

// Orderings sigma of 1..2n with sigma(2n+1-i) = pairing(sigma(i)), by
// filtering all of S_2n.
inline std::set<Perm> brute_refinements(const Perm& pairing) {
  const int m = static_cast<int>(pairing.size());
  std::set<Perm> out;
  for (const auto& s : all_perms(m)) {
    bool ok = true;
    for (int i = 1; i <= m && ok; ++i) ok = s[m - i] == pairing[s[i - 1] - 1];
    if (ok) out.insert(s);
  }
  return out;
}

// Generic rank of a Laurent matrix: the maximum rank over several rational
// specializations t_tau -> distinct primes and their powers.
inline std::size_t specialized_rank(const gsptri::LMatrix& a, std::size_t nvars) {
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::size_t best = 0;
  for (std::size_t shift = 0; shift < 4; ++shift) {
    std::vector<Rational> point;
    for (std::size_t t = 0; t < nvars; ++t) point.emplace_back(primes[(shift * 3 + t) % 12]);
    best = std::max(best, naive_rank(gsptri::evaluate(a, point)));
  }
  return best;
}

// Generic symplectic eigenvalue data: pairs (i, 2n+1-i) with product gamma.
inline gsptri::SymplecticPhiData random_symplectic(int n, std::uint64_t seed, std::int64_t p = 5) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    auto rng = gsptri::SplitMix64::substream(seed, "oracle-symplectic", attempt);
    gsptri::SymplecticPhiData s;
    s.base.shape = gsptri::PadicFieldShape::make(p, 1, 1);
    s.gamma = rng.nonzero_rational();
    s.base.eigenvalues.resize(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
      s.base.eigenvalues[static_cast<std::size_t>(i - 1)] = rng.nonzero_rational();
      s.base.eigenvalues[static_cast<std::size_t>(2 * n - i)] = s.gamma / s.base.eigenvalues[static_cast<std::size_t>(i - 1)];
    }
    std::vector<int> k;
    for (int i = 0; i < 2 * n; ++i) k.push_back(2 * n - 1 - i);
    s.base.ht_type = {k};
    s.pairing.resize(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= 2 * n; ++i) s.pairing[static_cast<std::size_t>(i - 1)] = 2 * n + 1 - i;
    if (gsptri::is_phi_generic(s.base)) return s;
  }
}

}  // namespace oracle
