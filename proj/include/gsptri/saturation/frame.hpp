#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsptri/characters/dominance.hpp"
#include "gsptri/error.hpp"
#include "gsptri/exact/laurent.hpp"
#include "gsptri/exact/linalg.hpp"
#include "gsptri/exact/matrix.hpp"
#include "gsptri/io/rng.hpp"
#include "gsptri/weyl/permutation.hpp"
#include "gsptri/weyl/symplectic.hpp"
#include "gsptri/weyl/weyl_group.hpp"

namespace gsptri {

// Weights k_{i,tau}: outer index i = 1..m (0-based here), inner index tau.
using WeightTable = std::vector<std::vector<int>>;

inline LaurentPoly t_power(const std::vector<int>& k) { return LaurentPoly::monomial(Exponent(k.begin(), k.end())); }

inline LMatrix torus_matrix(const WeightTable& k) {
  std::vector<LaurentPoly> d;
  for (const auto& row : k) d.push_back(t_power(row));
  return LMatrix::diagonal(d);
}

inline LMatrix torus_matrix_inverse(const WeightTable& k) {
  std::vector<LaurentPoly> d;
  for (const auto& row : k) d.push_back(t_power(row).inverse());
  return LMatrix::diagonal(d);
}

// Inverse of a lower unipotent matrix by forward substitution; stays inside
// the Laurent ring.
inline LMatrix unipotent_inverse(const LMatrix& u) {
  const std::size_t m = u.rows();
  LMatrix x = LMatrix::identity(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      LaurentPoly acc;
      for (std::size_t k = j; k < i; ++k)
        if (!u(i, k).is_zero() && !x(k, j).is_zero()) acc += u(i, k) * x(k, j);
      x(i, j) = -acc;
    }
  return x;
}

inline bool is_lower_unipotent(const LMatrix& u) {
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = i; j < u.cols(); ++j)
      if (!(u(i, j) == LaurentPoly(i == j ? 1 : 0))) return false;
  return true;
}

// exp(N) for nilpotent N.
inline QMatrix nilpotent_exp(const QMatrix& n) {
  QMatrix result = QMatrix::identity(n.rows());
  QMatrix term = QMatrix::identity(n.rows());
  Rational fact(1);
  for (long k = 1; k <= static_cast<long>(n.rows()); ++k) {
    term = term * n;
    if (term.is_zero()) break;
    fact *= Rational(k);
    const Rational inv = fact.inverse();
    result += term.map([&](const Rational& x) { return x * inv; });
  }
  return result;
}

// Generic triangulation data: a seeded lower unipotent u_w per Weyl element,
// and t_w = diag(t^{k_i}), shared by all w unless overridden.
class Frame {
 public:
  Frame(GroupKind group, int m, WeightTable weights, std::uint64_t seed)
      : group_(group), m_(m), weights_(std::move(weights)), seed_(seed) {
    if (m_ < 1) throw ArgumentError("frame: size must be positive");
    if (group_ == GroupKind::GSp && m_ % 2 != 0) throw ArgumentError("frame: GSp needs even size");
    if (static_cast<int>(weights_.size()) != m_) throw ArgumentError("frame: need m weight vectors");
    nvars_ = weights_.front().size();
    for (const auto& row : weights_)
      if (row.size() != nvars_) throw ArgumentError("frame: ragged weights");
  }

  GroupKind group() const { return group_; }
  int m() const { return m_; }
  std::size_t nvars() const { return nvars_; }
  std::uint64_t seed() const { return seed_; }
  const WeightTable& weights() const { return weights_; }

  const WeightTable& weights_for(const Perm& w) const {
    auto it = weight_override_.find(w);
    return it == weight_override_.end() ? weights_ : it->second;
  }
  void set_weights(const Perm& w, WeightTable k) { weight_override_[w] = std::move(k); }

  LMatrix t(const Perm& w) const { return torus_matrix(weights_for(w)); }
  LMatrix t_inverse(const Perm& w) const { return torus_matrix_inverse(weights_for(w)); }

  // Permutation matrix for GL, signed representative for GSp.
  LMatrix pi(const Perm& w) const {
    if (group_ == GroupKind::GL) return permutation_matrix<LaurentPoly>(w);
    return weyl_representative<LaurentPoly>(w);
  }

  LMatrix u(const Perm& w) const {
    auto it = u_override_.find(w);
    if (it != u_override_.end()) return it->second;
    return to_laurent(sample_u(w));
  }
  void set_u(const Perm& w, LMatrix u) {
    if (!is_lower_unipotent(u)) throw ArgumentError("frame: u_w must be lower unipotent");
    u_override_[w] = std::move(u);
  }

  // Seeded from (seed, w) alone, so u_w does not depend on which other
  // elements were asked for first.
  QMatrix sample_u(const Perm& w) const {
    std::uint64_t key = 0;
    for (int x : w) key = key * 31 + static_cast<std::uint64_t>(x);
    SplitMix64 rng = SplitMix64::substream(seed_, "u_w", key);
    const std::size_t m = static_cast<std::size_t>(m_);
    if (group_ == GroupKind::GL) {
      QMatrix u = QMatrix::identity(m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j) u(i, j) = rng.nonzero_rational();
      return u;
    }
    // exp of a random combination of the strictly lower sp basis elements.
    const int n = m_ / 2;
    QMatrix nil(m, m);
    for (const auto& e : gsp_basis_labels(n))
      if (e.strictly_lower(n)) nil += rng.nonzero_rational() * gsp_basis_matrix(n, e);
    return nilpotent_exp(nil);
  }

 private:
  GroupKind group_;
  int m_;
  WeightTable weights_;
  std::uint64_t seed_;
  std::size_t nvars_ = 0;
  std::map<Perm, WeightTable> weight_override_;
  std::map<Perm, LMatrix> u_override_;
};

// a_{w,w'} = u_{w'} t_{w'} Pi(w' o w^{-1}) t_w^{-1} u_w^{-1}.
inline LMatrix transform_matrix(const Frame& f, const Perm& w, const Perm& wp) {
  const Perm mid = compose(wp, inverse_perm(w));
  return f.u(wp) * f.t(wp) * f.pi(mid) * f.t_inverse(w) * unipotent_inverse(f.u(w));
}

// a_{w,w'}^{-1}, assembled from the inverted factors.
inline LMatrix transform_matrix_inverse(const Frame& f, const Perm& w, const Perm& wp) {
  const Perm mid = compose(wp, inverse_perm(w));
  return f.u(w) * f.t(w) * f.pi(mid).transpose() * f.t_inverse(wp) * unipotent_inverse(f.u(wp));
}

// An element of type (i, j) fixes every l outside [i, j] and swaps i, j.
inline bool is_type(const Perm& s, int i, int j) {
  if (!(1 <= i && i < j && j <= static_cast<int>(s.size()))) return false;
  for (int l = 1; l <= static_cast<int>(s.size()); ++l)
    if ((l < i || l > j) && at(s, l) != l) return false;
  return at(s, i) == j && at(s, j) == i;
}

// Installs u_{w'} for w' = sigma o w (sigma of type (i, j)) compatible with
// u_w: the flags agree outside [i, j], which is what the block shape of
// a_{w,w'} expresses.  With M = t_{w'} Pi(sigma) t_w^{-1} and V = u_w M^{-1},
// rows outside [i, j] are those of V and rows i..j are L V_b^{-1} V, where
// V_b is the middle block of V and L a fresh seeded lower unipotent block.
// Then a_{w,w'} = diag(I, L V_b^{-1}, I).
inline Perm adapt_neighbor(Frame& f, const Perm& w, const Perm& sigma, int i, int j) {
  if (f.group() != GroupKind::GL) throw ArgumentError("adapt_neighbor: GL frames only");
  if (!is_type(sigma, i, j)) throw ArgumentError("adapt_neighbor: sigma is not of type (i, j)");
  const Perm wp = compose(sigma, w);
  const auto& kw = f.weights_for(w);
  const auto& kwp = f.weights_for(wp);
  for (int l = 1; l <= f.m(); ++l)
    if ((l < i || l > j) && kw[static_cast<std::size_t>(l - 1)] != kwp[static_cast<std::size_t>(l - 1)])
      throw ArgumentError("adapt_neighbor: weights must agree outside [i, j]");

  const std::size_t m = static_cast<std::size_t>(f.m());
  const LMatrix uw = f.u(w);
  const LMatrix minv = f.t(w) * f.pi(sigma).transpose() * f.t_inverse(wp);
  const LMatrix v = uw * minv;

  const std::size_t lo = static_cast<std::size_t>(i - 1);
  const std::size_t hi = static_cast<std::size_t>(j - 1);
  const std::size_t b = hi - lo + 1;
  FMatrix vb(b, b);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < b; ++c) vb(r, c) = Fraction(v(lo + r, lo + c));
  SplitMix64 rng = SplitMix64::substream(f.seed(), "adapt", static_cast<std::uint64_t>(i * 1000 + j));
  FMatrix lblock = FMatrix::identity(b);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < r; ++c) lblock(r, c) = Fraction(rng.nonzero_rational());
  const LMatrix bprime = to_laurent(lblock * inverse(vb));

  LMatrix up = v;
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      LaurentPoly acc;
      for (std::size_t k = 0; k < b; ++k)
        if (!bprime(r, k).is_zero()) acc += bprime(r, k) * v(lo + k, c);
      up(lo + r, c) = acc;
    }
  f.set_u(wp, up);
  return wp;
}

struct BlockShapeResult {
  bool ok = true;
  std::string reason;
};

// Identity rows outside [i, j]; rows i..j vanish right of column j (the n
// block left of column i is free); the middle block is invertible over the
// Laurent ring; the (i, j) corner is a unit times t^corner when given.
inline BlockShapeResult check_block_shape(const LMatrix& a, int i, int j,
                                          const std::optional<std::vector<int>>& corner = std::nullopt) {
  const std::size_t m = a.rows();
  if (!(1 <= i && i < j && j <= static_cast<int>(m))) return {false, "bad block indices"};
  const std::size_t lo = static_cast<std::size_t>(i - 1);
  const std::size_t hi = static_cast<std::size_t>(j - 1);
  for (std::size_t r = 0; r < m; ++r) {
    const bool inside = lo <= r && r <= hi;
    for (std::size_t c = 0; c < m; ++c) {
      if (!inside) {
        if (!(a(r, c) == LaurentPoly(r == c ? 1 : 0)))
          return {false, "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") breaks an identity row"};
      } else if (c > hi && !a(r, c).is_zero()) {
        return {false, "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") right of the block"};
      }
    }
  }
  const std::size_t b = hi - lo + 1;
  LMatrix block(b, b);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < b; ++c) block(r, c) = a(lo + r, lo + c);
  if (!determinant(block).is_monomial()) return {false, "middle block is not invertible over the Laurent ring"};
  if (corner) {
    const LaurentPoly& x = a(lo, hi);
    if (!x.is_monomial()) return {false, "corner is not a unit times a monomial"};
    const Exponent& e = x.monomial_exponent();
    if (!std::equal(e.begin(), e.end(), corner->begin(), corner->end()))
      return {false, "corner exponent differs from the expected one"};
  }
  return {};
}

inline bool verify_block_shape(const LMatrix& a, int i, int j,
                               const std::optional<std::vector<int>>& corner = std::nullopt) {
  return check_block_shape(a, i, j, corner).ok;
}

// Corner exponent k_{w',i} - k_{w,j} for a_{w,w'}.
inline std::vector<int> expected_corner(const Frame& f, const Perm& w, const Perm& wp, int i, int j) {
  const auto& ki = f.weights_for(wp)[static_cast<std::size_t>(i - 1)];
  const auto& kj = f.weights_for(w)[static_cast<std::size_t>(j - 1)];
  std::vector<int> e(ki.size());
  for (std::size_t t = 0; t < e.size(); ++t) e[t] = ki[t] - kj[t];
  return e;
}

}  // namespace gsptri
