#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "gsptri/error.hpp"
#include "gsptri/weyl/permutation.hpp"
#include "gsptri/weyl/weyl_group.hpp"

namespace gsptri {

// Which Weyl group acts on the flag variety: all of S_m for GL_m, or the
// symplectic permutations of {1..2n} for GSp_2n in its standard embedding.
enum class GroupKind { GL, GSp };

inline std::string to_string(GroupKind g) { return g == GroupKind::GL ? "gl" : "gsp"; }

inline std::vector<Perm> weyl_perms(GroupKind g, int m) {
  if (g == GroupKind::GL) return symmetric_group(m);
  if (m % 2 != 0) throw ArgumentError("GSp needs an even number of degrees");
  std::vector<Perm> out;
  for (const auto& w : weyl_group(m / 2, std::max(weyl_bound(), m / 2)).elements) out.push_back(w.sigma);
  return out;
}

// Degrees are the jump indices of the graded pieces, the negatives of the
// Hodge-Tate weights.  This is the only place the orientation flips.
inline std::vector<int> weights_to_degrees(const std::vector<int>& k) {
  std::vector<int> d(k);
  for (auto& x : d) x = -x;
  return d;
}
inline std::vector<int> degrees_to_weights(const std::vector<int>& d) { return weights_to_degrees(d); }

namespace detail {

// The Step 1-4 recursion for one embedding.  A relative position of a flag
// in G/B against the fixed one is a Weyl element w, whose degree sequence is
// (d_{w(1)}, ..., d_{w(m)}); a stratum is nonempty iff some still admissible
// w lands in it.  `alive` holds the w compatible with every value fixed so
// far.
inline std::vector<int> dominance_one(const std::vector<int>& d, const std::vector<Perm>& weyl) {
  const std::size_t m = d.size();
  std::vector<std::vector<int>> alive;
  for (const auto& w : weyl) {
    std::vector<int> seq(m);
    for (std::size_t i = 0; i < m; ++i) seq[i] = d[static_cast<std::size_t>(w[i] - 1)];
    alive.push_back(std::move(seq));
  }
  std::vector<int> dom(d);
  std::sort(dom.begin(), dom.end());  // d_dom,1 <= ... <= d_dom,m

  std::vector<int> out;
  std::size_t pos = 0;  // entries of out already fixed
  while (pos < m) {
    if (alive.empty()) throw InvariantError("dominance: no Weyl witness for the accumulated constraints");
    // Step 1: the largest k with U^k nonempty.
    std::size_t k = 0;
    for (const auto& seq : alive) {
      std::size_t kk = 0;
      while (pos + kk < m && seq[pos + kk] == dom[kk]) ++kk;
      k = std::max(k, kk);
    }
    for (std::size_t i = 0; i < k; ++i) out.push_back(dom[i]);
    if (pos + k == m) break;
    // Step 2: among the strata U^{k,j}, j > k, the first nonempty one; this
    // is the open stratum a generic flag of U^k falls into.
    std::size_t j = m;
    for (const auto& seq : alive) {
      if (!std::equal(dom.begin(), dom.begin() + static_cast<std::ptrdiff_t>(k), seq.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
      for (std::size_t jj = k + 1; jj < dom.size() && jj < j; ++jj)
        if (seq[pos + k] == dom[jj]) j = jj;
    }
    if (j == m) throw InvariantError("dominance: empty Step 2 stratification");
    out.push_back(dom[j]);
    // Step 3: drop the consumed values, keep only the witnesses that agree
    // with every fixed entry, and recurse on the tail.
    const std::size_t fixed = pos + k + 1;
    std::erase_if(alive, [&](const std::vector<int>& seq) {
      return !std::equal(out.begin() + static_cast<std::ptrdiff_t>(pos), out.end(), seq.begin() + static_cast<std::ptrdiff_t>(pos));
    });
    std::vector<int> rest(dom.begin() + static_cast<std::ptrdiff_t>(k), dom.end());
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j - k));
    dom = std::move(rest);
    pos = fixed;
  }
  return out;
}

}  // namespace detail

// d'_dom per embedding, from per-embedding degree sequences of length m.
inline std::vector<std::vector<int>> strictly_dominant_weight(const std::vector<std::vector<int>>& degrees, GroupKind group) {
  if (degrees.empty()) throw ArgumentError("strictly_dominant_weight: no embeddings");
  const std::size_t m = degrees.front().size();
  if (m == 0) throw ArgumentError("strictly_dominant_weight: empty degree sequence");
  for (const auto& d : degrees)
    if (d.size() != m) throw ArgumentError("strictly_dominant_weight: ragged degree sequences");
  const auto weyl = weyl_perms(group, static_cast<int>(m));
  std::vector<std::vector<int>> out;
  for (const auto& d : degrees) out.push_back(detail::dominance_one(d, weyl));
  return out;
}

// (d_1, ..., d_2n) -> (d_1, ..., d_n, d_1 + d_2n): the GSp cocharacter
// through which the standard representation's torus weight factors.
inline std::vector<int> gl_to_gsp_weight(const std::vector<int>& d) {
  if (d.empty() || d.size() % 2 != 0) throw ArgumentError("gl_to_gsp_weight: need an even length");
  const std::size_t n = d.size() / 2;
  std::vector<int> g(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n));
  g.push_back(d.front() + d.back());
  return g;
}

// d'_1 > ... > d'_n and 2 d'_n > d'_{n+1}, for every embedding.
inline bool is_strictly_dominant_gsp(const std::vector<std::vector<int>>& dprime) {
  for (const auto& d : dprime) {
    if (d.size() < 2) throw ArgumentError("is_strictly_dominant_gsp: need n+1 >= 2 entries");
    const std::size_t n = d.size() - 1;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!(d[i] > d[i + 1])) return false;
    if (!(2 * d[n - 1] > d[n])) return false;
  }
  return true;
}

}  // namespace gsptri
