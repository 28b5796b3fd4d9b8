#include <gtest/gtest.h>

#include "gsptri/gsptri.hpp"
#include "oracles.hpp"

using gsptri::Frame;
using gsptri::GroupKind;
using gsptri::LMatrix;
using gsptri::Perm;
using gsptri::WeightTable;

namespace {

WeightTable descending(int m, std::size_t nvars) {
  WeightTable k(static_cast<std::size_t>(m), std::vector<int>(nvars));
  for (int i = 0; i < m; ++i)
    for (std::size_t t = 0; t < nvars; ++t) k[static_cast<std::size_t>(i)][t] = (m - i) * static_cast<int>(t + 2) - 1;
  return k;
}

// All sigma of type (i, j): swap i and j, fix everything outside [i, j].
std::vector<Perm> type_elements(int m, int i, int j) {
  std::vector<Perm> out;
  for (const auto& p : oracle::all_perms(m))
    if (gsptri::is_type(p, i, j)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Frame, SampledUIsLowerUnipotentAndSeedStable) {
  Frame a(GroupKind::GL, 4, descending(4, 1), 9);
  Frame b(GroupKind::GL, 4, descending(4, 1), 9);
  Frame c(GroupKind::GL, 4, descending(4, 1), 10);
  const Perm w{2, 1, 4, 3};
  EXPECT_TRUE(gsptri::is_lower_unipotent(a.u(w)));
  EXPECT_EQ(a.u(w), b.u(w));
  EXPECT_FALSE(a.u(w) == c.u(w));
}

TEST(Frame, GspUIsSymplecticUnipotent) {
  for (int n = 1; n <= 3; ++n) {
    Frame f(GroupKind::GSp, 2 * n, descending(2 * n, 1), 3);
    for (const auto& w : gsptri::weyl_group(n).elements) {
      const auto u = f.sample_u(w.sigma);
      EXPECT_EQ(gsptri::similitude(u), gsptri::Rational(1));
      EXPECT_TRUE(gsptri::is_lower_unipotent(gsptri::to_laurent(u)));
    }
  }
}

TEST(TransformMatrix, CocycleAndInverse) {
  for (std::uint64_t seed : {1u, 2u}) {
    Frame f(GroupKind::GL, 3, descending(3, 2), seed);
    const auto perms = oracle::all_perms(3);
    for (const auto& w1 : perms)
      for (const auto& w2 : perms) {
        const LMatrix a12 = gsptri::transform_matrix(f, w1, w2);
        EXPECT_EQ(a12 * gsptri::transform_matrix_inverse(f, w1, w2), LMatrix::identity(3));
        for (const auto& w3 : {perms[1], perms[4]})
          EXPECT_EQ(gsptri::transform_matrix(f, w2, w3) * a12, gsptri::transform_matrix(f, w1, w3));
      }
  }
}

TEST(TransformMatrix, GspElementsAreSimilitudes) {
  for (int n = 1; n <= 2; ++n) {
    const int m = 2 * n;
    WeightTable k(static_cast<std::size_t>(m), std::vector<int>(1));
    for (int i = 0; i < m; ++i) k[static_cast<std::size_t>(i)][0] = m - 1 - i;  // k_i + k_{i'} constant
    Frame f(GroupKind::GSp, m, k, 5);
    const Perm id = gsptri::identity_perm(m);
    for (const auto& w : gsptri::weyl_group(n).elements) {
      const auto sim = gsptri::similitude(gsptri::transform_matrix(f, id, w.sigma));
      ASSERT_TRUE(sim.has_value());
      EXPECT_TRUE(sim->is_monomial());
    }
  }
}

TEST(TransformMatrix, CornerAndBlockShapeOfAdaptedNeighbours) {
  for (int m = 2; m <= 5; ++m)
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto k = descending(m, 1);
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
          for (const auto& sigma : type_elements(m, i, j)) {
            Frame f(GroupKind::GL, m, k, seed);
            const Perm id = gsptri::identity_perm(m);
            const Perm wp = gsptri::adapt_neighbor(f, id, sigma, i, j);
            const LMatrix a = gsptri::transform_matrix(f, id, wp);
            const std::vector<int> corner{k[i - 1][0] - k[j - 1][0]};
            EXPECT_EQ(gsptri::expected_corner(f, id, wp, i, j), corner);
            const auto r = gsptri::check_block_shape(a, i, j, corner);
            EXPECT_TRUE(r.ok) << "m=" << m << " sigma=" << gsptri::perm_to_string(sigma) << ": " << r.reason;
          }
    }
}

TEST(TransformMatrix, BlockShapeRejectsTampering) {
  const auto k = descending(3, 1);
  Frame f(GroupKind::GL, 3, k, 4);
  const Perm id = gsptri::identity_perm(3);
  const Perm wp = gsptri::adapt_neighbor(f, id, {2, 1, 3}, 1, 2);
  LMatrix a = gsptri::transform_matrix(f, id, wp);
  EXPECT_TRUE(gsptri::verify_block_shape(a, 1, 2, std::vector<int>{k[0][0] - k[1][0]}));
  EXPECT_FALSE(gsptri::verify_block_shape(a, 1, 2, std::vector<int>{k[0][0] - k[1][0] + 1}));
  a(2, 0) = gsptri::LaurentPoly(1);
  EXPECT_FALSE(gsptri::verify_block_shape(a, 1, 2));
  EXPECT_THROW(gsptri::adapt_neighbor(f, id, {1, 2, 3}, 1, 2), gsptri::ArgumentError);
}
