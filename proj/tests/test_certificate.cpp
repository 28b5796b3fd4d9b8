#include <gtest/gtest.h>

#include "gsptri/gsptri.hpp"
#include "oracles.hpp"

using gsptri::GroupKind;
using gsptri::PadicFieldShape;
using gsptri::SpanCertificate;
using gsptri::WeightTable;
using gsptri::WeylMode;

namespace {

WeightTable descending(int m, std::size_t nvars) {
  WeightTable k(static_cast<std::size_t>(m), std::vector<int>(nvars));
  for (int i = 0; i < m; ++i)
    for (std::size_t t = 0; t < nvars; ++t) k[static_cast<std::size_t>(i)][t] = (m - 1 - i) * static_cast<int>(t + 1);
  return k;
}

// Re-derives each witness from the stored generator vectors.
void recheck(const SpanCertificate& c) {
  const std::size_t dim = c.coordinates.size();
  for (const auto& w : c.witnesses) {
    ASSERT_TRUE(w.found) << w.target;
    gsptri::LVector target(dim, gsptri::LaurentPoly(c.sigma));
    target[w.target_index] = gsptri::LaurentPoly::constant(c.sigma, gsptri::Rational(1));
    EXPECT_TRUE(gsptri::verify_witness(target, c.generators, w.data)) << w.target;
  }
}

std::size_t generic_rank(const SpanCertificate& c) {
  gsptri::LMatrix g(c.generators.size(), c.coordinates.size());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t col = 0; col < g.cols(); ++col) g(r, col) = c.generators[r][col];
  return oracle::specialized_rank(g, c.sigma);
}

}  // namespace

TEST(QuadrantProperty, Examples) {
  EXPECT_TRUE(gsptri::quadrant_property({2, 1}, 2, 1));
  EXPECT_FALSE(gsptri::quadrant_property({2, 1}, 1, 2));
  EXPECT_TRUE(gsptri::quadrant_property({3, 2, 1}, 3, 1));
}

TEST(GlCertificate, SmallExample) {
  const auto c = gsptri::verify_span_gl(2, PadicFieldShape::make(3, 1, 1), descending(2, 1), 7, WeylMode::Transpositions);
  EXPECT_TRUE(c.verdict);
  EXPECT_EQ(c.final_rank, 4u);
  ASSERT_TRUE(c.bareiss_rank);
  EXPECT_EQ(*c.bareiss_rank, 4u);
}

TEST(GlCertificate, PassesAcrossSizesModesSeeds) {
  for (int m = 1; m <= 4; ++m)
    for (std::size_t sigma : {1u, 2u})
      for (auto mode : {WeylMode::Transpositions, WeylMode::Full})
        for (std::uint64_t seed : {1u, 2u}) {
          const auto c = gsptri::verify_span_gl(m, PadicFieldShape::make(3, 1, static_cast<int>(sigma)), descending(m, sigma), seed, mode);
          EXPECT_TRUE(c.verdict) << "m=" << m;
          EXPECT_EQ(c.final_rank, static_cast<std::size_t>(m * m));
          EXPECT_TRUE(c.monomial_pivots);
          EXPECT_EQ(generic_rank(c), c.final_rank);
          recheck(c);
          for (const auto& s : c.stages)
            for (const auto& g : s.generators)
              if (g.r > 0) EXPECT_TRUE(gsptri::quadrant_property(g.w, g.r, g.s)) << g.describe();
        }
}

TEST(GlCertificate, PreconditionsAndBounds) {
  const auto s = PadicFieldShape::make(3, 1, 1);
  EXPECT_THROW(gsptri::verify_span_gl(2, s, {{1}, {1}}, 7, WeylMode::Full), gsptri::PreconditionError);
  EXPECT_THROW(gsptri::verify_span_gl(2, s, {{1}}, 7, WeylMode::Full), gsptri::ArgumentError);
  EXPECT_THROW(gsptri::verify_span_gl(7, s, descending(7, 1), 7, WeylMode::Full), gsptri::ResourceError);
}

TEST(GspCertificate, StagesRanksAndSiegelWitnesses) {
  for (int n = 1; n <= 2; ++n)
    for (std::uint64_t seed : {7u, 8u}) {
      const auto c = gsptri::verify_span_gsp(n, PadicFieldShape::make(3, 1, 1), descending(2 * n, 1), seed);
      EXPECT_TRUE(c.verdict);
      EXPECT_EQ(c.final_rank, static_cast<std::size_t>(2 * n * n + n + 1));
      ASSERT_EQ(c.stages.size(), 3u);
      EXPECT_EQ(c.stages[0].label, "siegel");
      EXPECT_EQ(c.stages[0].rank, static_cast<std::size_t>(n * n + 1 + n * (n + 1) / 2));
      EXPECT_EQ(c.stages[1].rank, c.stages[0].rank + static_cast<std::size_t>(n));
      EXPECT_EQ(generic_rank(c), c.final_rank);
      recheck(c);
      // Opposite Siegel parabolic: everything but the n(n+1)/2 upper-right elements.
      EXPECT_EQ(c.siegel_witnesses.size(), static_cast<std::size_t>(2 * n * n + n + 1 - n * (n + 1) / 2));
      for (const auto& w : c.siegel_witnesses) EXPECT_TRUE(w.found && w.verified) << w.target;
    }
}

TEST(GspCertificate, AcceptsCompressedWeights) {
  // (k_1, k_2, c) expands to (k_1, k_2, c - k_2, c - k_1).
  const auto full = gsptri::expand_gsp_weights(2, {{5}, {3}, {6}});
  EXPECT_EQ(full, (WeightTable{{5}, {3}, {3}, {1}}));
  EXPECT_THROW(gsptri::verify_span_gsp(2, PadicFieldShape::make(3, 1, 1), {{5}, {3}, {6}}, 1), gsptri::PreconditionError);
  const auto c = gsptri::verify_span_gsp(2, PadicFieldShape::make(3, 1, 1), {{5}, {3}, {5}}, 1);
  EXPECT_TRUE(c.verdict);
  EXPECT_THROW(gsptri::verify_span_gsp(2, PadicFieldShape::make(3, 1, 1), {{4}, {3}, {2}, {0}}, 1), gsptri::PreconditionError);
}

TEST(GspCertificate, DeterministicForFixedSeed) {
  const auto s = PadicFieldShape::make(3, 1, 2);
  const auto a = gsptri::io::to_json(gsptri::verify_span_gsp(2, s, descending(4, 2), 11)).dump();
  const auto b = gsptri::io::to_json(gsptri::verify_span_gsp(2, s, descending(4, 2), 11)).dump();
  EXPECT_EQ(a, b);
}

TEST(HConditions, GenericPassesForcedFails) {
  for (int n = 1; n <= 2; ++n) {
    const auto s = PadicFieldShape::make(3, 1, 1);
    const auto c = gsptri::verify_span_gsp(n, s, descending(2 * n, 1), 7);
    const auto phi = gsptri::generic_eigenvalues(GroupKind::GSp, 2 * n, s, 7);
    gsptri::PhiModuleData probe;
    probe.shape = s;
    probe.eigenvalues = phi;
    EXPECT_TRUE(gsptri::is_phi_generic(probe));
    for (int i = 1; i <= n; ++i) EXPECT_EQ(phi[i - 1] * phi[2 * n - i], phi[0] * phi[2 * n - 1]);
    EXPECT_TRUE(gsptri::h_conditions_for_adjoint(gsptri::frame_parameter(c.weights, phi), c, s).verdict);
    const auto forced = gsptri::forced_eigenvalues(GroupKind::GSp, 2 * n, s, 7);
    ASSERT_TRUE(forced);
    EXPECT_EQ((*forced)[0] / (*forced)[1], s.q());
    EXPECT_FALSE(gsptri::h_conditions_for_adjoint(gsptri::frame_parameter(c.weights, *forced), c, s).verdict);
  }
  for (int m = 2; m <= 4; ++m) {
    const auto s = PadicFieldShape::make(5, 1, 1);
    const auto c = gsptri::verify_span_gl(m, s, descending(m, 1), 3, WeylMode::Transpositions);
    EXPECT_TRUE(gsptri::h_conditions_for_adjoint(gsptri::frame_parameter(c.weights, gsptri::generic_eigenvalues(GroupKind::GL, m, s, 3)), c, s).verdict);
    EXPECT_FALSE(gsptri::h_conditions_for_adjoint(gsptri::frame_parameter(c.weights, *gsptri::forced_eigenvalues(GroupKind::GL, m, s, 3)), c, s).verdict);
  }
}
