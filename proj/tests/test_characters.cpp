#include <gtest/gtest.h>

#include <set>

#include "gsptri/gsptri.hpp"
#include "oracles.hpp"

using gsptri::Character;
using gsptri::PadicFieldShape;
using gsptri::Perm;
using gsptri::Rational;

namespace {

PadicFieldShape qp(std::int64_t p = 5) { return PadicFieldShape::make(p, 1, 1); }

gsptri::PhiModuleData gl_data(std::vector<Rational> phi, std::vector<int> k, std::int64_t p = 5) {
  gsptri::PhiModuleData d;
  d.shape = qp(p);
  d.eigenvalues = std::move(phi);
  d.ht_type = {std::move(k)};
  d.validate();
  return d;
}

}  // namespace

TEST(Cohomology, RankOneTable) {
  const auto s = qp();
  EXPECT_EQ(gsptri::cohomology_dims(Character::trivial(1), s), (gsptri::CohomologyDims{1, 2, 0}));
  EXPECT_EQ(gsptri::cohomology_dims(gsptri::cyclotomic_character(s), s), (gsptri::CohomologyDims{0, 2, 1}));
  EXPECT_EQ(gsptri::cohomology_dims(Character({-2}, Rational(1)), s), (gsptri::CohomologyDims{1, 2, 0}));
  EXPECT_EQ(gsptri::cohomology_dims(Character({3}, Rational(1, 5)), s), (gsptri::CohomologyDims{0, 2, 1}));
  EXPECT_EQ(gsptri::cohomology_dims(Character({1}, Rational(2)), s), (gsptri::CohomologyDims{0, 1, 0}));
}

TEST(Cohomology, DualityAndEulerCharacteristicOnGrid) {
  for (int e = 1; e <= 2; ++e) {
    const auto s = PadicFieldShape::make(3, 1, e);
    const auto eps = gsptri::cyclotomic_character(s);
    for (const Rational& a : {Rational(1), Rational(1, 3), Rational(2), Rational(3)})
      for (int k0 = -3; k0 <= 3; ++k0)
        for (int k1 = -3; k1 <= 3; ++k1) {
          if (e == 1 && k1 != -3) continue;
          std::vector<int> k{k0};
          if (e == 2) k.push_back(k1);
          const Character d(k, a);
          const auto h = gsptri::cohomology_dims(d, s);
          EXPECT_EQ(h.h2, gsptri::cohomology_dims(eps * d.inverse(), s).h0);
          EXPECT_EQ(h.h1, s.degree() + h.h0 + h.h2);
        }
  }
}

TEST(Regular, ParameterRegularity) {
  const auto s = qp();
  EXPECT_FALSE(gsptri::is_regular_parameter({Character({0}, Rational(1)), Character({0}, Rational(1))}, s));
  EXPECT_TRUE(gsptri::is_regular_parameter({Character({1}, Rational(2)), Character({0}, Rational(3))}, s));
  // delta_1 / delta_2 = epsilon.
  EXPECT_FALSE(gsptri::is_regular_parameter({Character({1}, Rational(1, 5)), Character({0}, Rational(1))}, s));
}

TEST(Berger, GlTwoParameters) {
  const auto d = gl_data({Rational(2), Rational(3)}, {1, 0});
  const auto refs = gsptri::enumerate_gl_refinements(d);
  ASSERT_EQ(refs.size(), 2u);
  EXPECT_EQ(gsptri::berger_parameter(d, refs[0]), (std::vector<Character>{Character({1}, Rational(2)), Character({0}, Rational(3))}));
  EXPECT_EQ(gsptri::berger_parameter(d, refs[1]), (std::vector<Character>{Character({1}, Rational(3)), Character({0}, Rational(2))}));
  EXPECT_EQ(gsptri::enumerate_gl_refinements(gl_data({Rational(2)}, {0})).size(), 1u);
}

TEST(Refinements, SymplecticCountMatchesBruteForce) {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto data = oracle::random_symplectic(n, seed);
      const auto refs = gsptri::enumerate_symplectic_refinements(data);
      EXPECT_EQ(refs.size(), gsptri::hyperoctahedral_order(n));
      std::set<Perm> got;
      for (const auto& r : refs) got.insert(r.eigenvalue_order);
      EXPECT_EQ(got.size(), refs.size());
      EXPECT_EQ(got, oracle::brute_refinements(data.pairing));
    }
}

TEST(Refinements, PairingViolationIsDataIntegrity) {
  auto data = oracle::random_symplectic(2, 3);
  data.base.eigenvalues[0] = data.base.eigenvalues[0] + Rational(1);
  EXPECT_THROW(data.validate(), gsptri::DataIntegrityError);
}

TEST(Predicates, GenericNoncriticalBenign) {
  const auto d = gl_data({Rational(2), Rational(3)}, {1, 0});
  EXPECT_TRUE(gsptri::is_phi_generic(d));
  EXPECT_TRUE(gsptri::is_noncritical(d, d.identity_refinement({1, 2}), gsptri::GroupKind::GL));
  gsptri::Refinement swapped{{1, 2}, {{2, 1}}};
  EXPECT_FALSE(gsptri::is_noncritical(d, swapped, gsptri::GroupKind::GL));
  EXPECT_TRUE(gsptri::is_benign(d));

  const auto bad = gl_data({Rational(1), Rational(5)}, {1, 0});
  EXPECT_FALSE(gsptri::is_phi_generic(bad));
  const auto r = gsptri::check_benign(bad);
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.violated, "phi_generic");

  const auto flat = gl_data({Rational(2), Rational(3)}, {0, 0});
  EXPECT_THROW(gsptri::is_noncritical(flat, flat.identity_refinement({1, 2}), gsptri::GroupKind::GL), gsptri::PreconditionError);
  EXPECT_EQ(gsptri::check_benign(flat).violated, "regular_ht");
  EXPECT_FALSE(gsptri::is_phi_generic(gl_data({Rational(2), Rational(2)}, {1, 0})));
}

TEST(Predicates, GenericityUsesResidueDegree) {
  gsptri::PhiModuleData d;
  d.shape = PadicFieldShape::make(3, 2, 1);
  d.eigenvalues = {Rational(9), Rational(1)};
  d.ht_type = {{1, 0}, {1, 0}};
  EXPECT_FALSE(gsptri::is_phi_generic(d));
  d.eigenvalues = {Rational(3), Rational(1)};
  EXPECT_TRUE(gsptri::is_phi_generic(d));
}

TEST(ExtSaturated, Examples) {
  const auto s = qp();
  // val(delta_1(varpi)) = 2.
  EXPECT_TRUE(gsptri::ext_saturated_check(s, {{5, 0}}, {Character({0}, Rational(25)), Character({0}, Rational(1))}));
  EXPECT_FALSE(gsptri::ext_saturated_check(s, {{3, 3}}, {Character({0}, Rational(1)), Character({0}, Rational(1))}));
  EXPECT_TRUE(gsptri::ext_saturated_check(s, {{1, 0}}, {Character({0}, Rational(2)), Character({0}, Rational(1))}));
  EXPECT_FALSE(gsptri::ext_saturated_check(s, {{2, 0}}, {Character({1}, Rational(5)), Character({0}, Rational(1))}));
}

TEST(ExtSaturated, RamifiedValuationScaling) {
  // e = 2: delta(varpi) has valuation val(a) + (k_0 + k_1)/2; the check works with e times it.
  const auto s = PadicFieldShape::make(3, 1, 2);
  const Character d1({1, 0}, Rational(1));
  EXPECT_EQ(d1.scaled_valuation(s), 1);
  EXPECT_TRUE(gsptri::ext_saturated_check(s, {{2, 0}, {2, 0}}, {d1, Character({0, 0}, Rational(1))}));
  EXPECT_FALSE(gsptri::ext_saturated_check(s, {{1, 0}, {2, 0}}, {d1, Character({0, 0}, Rational(1))}));
}

TEST(HSurjectivity, Examples) {
  const auto s = qp(3);
  const std::vector<Character> d{Character({2}, Rational(5)), Character({0}, Rational(2))};
  EXPECT_TRUE(gsptri::h_surjectivity_check(d, d, s));
  EXPECT_TRUE(gsptri::h_surjectivity_check(d, {Character({0}, Rational(5)), d[1]}, s));
  const std::vector<Character> one{Character({2}, Rational(1))};
  const auto r = gsptri::check_h_surjectivity(one, {Character({0}, Rational(1))}, s);
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.violated, "excluded_value");
  const std::vector<Character> neg{Character({0}, Rational(2))};
  EXPECT_EQ(gsptri::check_h_surjectivity(neg, {Character({1}, Rational(2))}, s).violated, "weight_condition");
  EXPECT_THROW(gsptri::h_surjectivity_check(neg, {Character({1}, Rational(7))}, s), gsptri::ArgumentError);
}

TEST(Berger, DeterminantDataIsRefinementIndependent) {
  for (int n = 1; n <= 3; ++n) {
    const auto data = oracle::random_symplectic(n, 17);
    Rational prod(1);
    for (const auto& a : data.base.eigenvalues) prod *= a;
    for (const auto& r : gsptri::enumerate_symplectic_refinements(data)) {
      const auto params = gsptri::berger_parameter(data.base, r);
      Rational pv(1);
      std::vector<int> weights;
      for (const auto& d : params) {
        pv *= d.value;
        weights.push_back(d.weights[0]);
      }
      EXPECT_EQ(pv, prod);
      std::sort(weights.begin(), weights.end(), std::greater<>());
      EXPECT_EQ(weights, data.base.ht_type[0]);
    }
  }
}

TEST(Refinements, ClosedUnderPairingReversal) {
  // sigma -> i |-> pairing(sigma(i)) stays a symplectic ordering.
  for (int n = 1; n <= 3; ++n) {
    const auto data = oracle::random_symplectic(n, 23);
    std::set<Perm> all;
    for (const auto& r : gsptri::enumerate_symplectic_refinements(data)) all.insert(r.eigenvalue_order);
    for (const auto& s : all) {
      Perm t(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) t[i] = data.pairing[static_cast<std::size_t>(s[i] - 1)];
      EXPECT_TRUE(all.count(t)) << gsptri::perm_to_string(s);
    }
  }
}

TEST(Predicates, NoncriticalInvariantUnderRelabeling) {
  gsptri::SplitMix64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3;
    std::vector<Rational> phi;
    for (int i = 0; i < m; ++i) phi.push_back(Rational(static_cast<long>(rng.uniform(2, 40)) * (i + 1), 7));
    gsptri::PhiModuleData d = gl_data(phi, {4, 2, 1});
    Perm weight_order = gsptri::identity_perm(m);
    for (int s = 0; s < static_cast<int>(rng.below(6)); ++s) std::next_permutation(weight_order.begin(), weight_order.end());
    Perm eig = gsptri::identity_perm(m);
    for (int s = 0; s < static_cast<int>(rng.below(6)); ++s) std::next_permutation(eig.begin(), eig.end());
    const gsptri::Refinement r{eig, {weight_order}};
    // Relabel eigenvalue indices by pi: phi'_{pi(i)} = phi_i.
    Perm pi = gsptri::identity_perm(m);
    for (int s = 0; s < static_cast<int>(rng.below(6)); ++s) std::next_permutation(pi.begin(), pi.end());
    gsptri::PhiModuleData d2 = d;
    for (int i = 1; i <= m; ++i) d2.eigenvalues[static_cast<std::size_t>(pi[i - 1] - 1)] = d.eigenvalues[static_cast<std::size_t>(i - 1)];
    gsptri::Refinement r2 = r;
    for (int i = 1; i <= m; ++i) r2.eigenvalue_order[static_cast<std::size_t>(i - 1)] = pi[static_cast<std::size_t>(r.eigenvalue_order[i - 1] - 1)];
    EXPECT_EQ(gsptri::berger_parameter(d, r), gsptri::berger_parameter(d2, r2));
    EXPECT_EQ(gsptri::is_noncritical(d, r, gsptri::GroupKind::GL), gsptri::is_noncritical(d2, r2, gsptri::GroupKind::GL));
  }
}
