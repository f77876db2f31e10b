#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "nclorentz/invariants.hpp"
#include "nclorentz/kinematical.hpp"
#include "support.hpp"

using namespace nclorentz;

namespace {

Vec br(const LieAlgebra& g, const std::string& a, const std::string& b) { return g.bracket(g.e(a), g.e(b)); }

}  // namespace

TEST(LieAlgebra, GLambdaBrackets) {
  const LieAlgebra g = build_g_lambda();
  ASSERT_EQ(g.dim(), 10u);
  EXPECT_EQ(g.labels(), kinematical_labels());
  EXPECT_EQ(br(g, "K1", "P0"), g.e("P1"));
  EXPECT_EQ(br(g, "P0", "P1"), g.e("K1").scaled(-Lam()));
  EXPECT_EQ(br(g, "P1", "P2"), g.e("J3").scaled(Lam()));
  EXPECT_EQ(br(g, "K1", "K2"), -g.e("J3"));
  EXPECT_EQ(br(g, "K2", "P2"), g.e("P0"));
  EXPECT_EQ(br(g, "J1", "K2"), g.e("K3"));
  EXPECT_EQ(br(g, "J3", "P1"), g.e("P2"));
  EXPECT_TRUE(br(g, "K1", "P2").is_zero());
  EXPECT_TRUE(br(g, "J1", "P0").is_zero());
}

TEST(LieAlgebra, JacobiHoldsForEveryFamily) {
  for (const auto& g : {build_g_lambda(), build_newtonian(), build_carrollian(), build_g_2plus1(), build_lorentz()})
    EXPECT_TRUE(jacobi_violations(g).empty()) << g.name();
}

TEST(LieAlgebra, JacobiDetectsCorruption) {
  LieAlgebra g = build_g_lambda();
  g.set_bracket("K1", "K2", g.e("J3"));
  const auto bad = jacobi_violations(g);
  ASSERT_FALSE(bad.empty());
}

TEST(LieAlgebra, TwoPlusOne) {
  const LieAlgebra g = build_g_2plus1();
  EXPECT_EQ(br(g, "J3", "P1"), g.e("P2"));
  EXPECT_EQ(br(g, "P1", "P2"), g.e("J3").scaled(Lam()));
  EXPECT_EQ(br(g, "P0", "P2"), g.e("K2").scaled(-Lam()));
}

TEST(LieAlgebra, TwoPlusOneIsRestrictionOfThreePlusOne) {
  // Structure constants on {P0,P1,P2,K1,K2,J3} agree with g_Lambda wherever the
  // bracket closes on that subset.
  const LieAlgebra g = build_g_lambda(), g3 = build_g_2plus1();
  for (std::size_t i = 0; i < g3.dim(); ++i)
    for (std::size_t j = 0; j < g3.dim(); ++j) {
      const Vec big = br(g, g3.labels()[i], g3.labels()[j]);
      Vec small(g.dim());
      for (const auto& [k, v] : g3.bracket(i, j).coeffs()) small += g.e(g3.labels()[k[0]]).scaled(v);
      EXPECT_EQ(big, small) << g3.labels()[i] << "," << g3.labels()[j];
    }
}

TEST(LieAlgebra, ContractedFamilies) {
  const LieAlgebra n = build_newtonian(), c = build_carrollian();
  EXPECT_TRUE(br(n, "K1", "P1").is_zero());
  EXPECT_TRUE(br(n, "K1", "K2").is_zero());
  EXPECT_TRUE(br(n, "P1", "P2").is_zero());
  EXPECT_EQ(br(n, "K1", "P0"), n.e("P1"));
  EXPECT_EQ(br(n, "P0", "P1"), n.e("K1").scaled(-Lam()));
  EXPECT_TRUE(br(c, "K1", "P0").is_zero());
  EXPECT_EQ(br(c, "K1", "P1"), c.e("P0"));
  EXPECT_TRUE(br(c, "K1", "K2").is_zero());
  EXPECT_EQ(br(c, "P1", "P2"), c.e("J3").scaled(Lam()));
}

TEST(LieAlgebra, SubalgebraDecomposition) {
  const LieAlgebra g = build_g_lambda();
  const Subalgebra h = lorentz_subalgebra(g);
  EXPECT_EQ(h.indices.size(), 6u);
  const auto t = translation_indices(g);
  for (auto i : h.indices)
    for (auto p : t)
      for (const auto& [k, v] : g.bracket(i, p).coeffs()) EXPECT_TRUE(std::find(t.begin(), t.end(), k[0]) != t.end());
  // [t,t] lies in h and carries a factor Lambda.
  for (auto p : t)
    for (auto q : t)
      for (const auto& [k, v] : g.bracket(p, q).coeffs()) {
        EXPECT_TRUE(h.contains(k[0]));
        EXPECT_EQ(v.min_exponent(Var::Lambda), 1);
      }
  EXPECT_THROW(make_subalgebra(g, "t", {"P0", "P1", "P2", "P3"}), NotClosed);
  EXPECT_NO_THROW(make_subalgebra(build_g_2plus1(), "h", {"K1", "K2", "J3"}));
}

TEST(Ad, Examples) {
  const LieAlgebra g = build_g_lambda();
  EXPECT_TRUE(ad(g, g.e("J1"), w2(g, "J2", "J3")).is_zero());
  EXPECT_TRUE(ad(g, g.e("K1"), w2(g, "K1", "J1")).is_zero());
  EXPECT_TRUE(ad(g, g.e("J1"), w2(g, "K1", "J1")).is_zero());
  EXPECT_TRUE(ad(g, g.e("J1"), Bivector(10)).is_zero());
  // ad_{P0}(K1^J1) = [P0,K1]^J1 = -P1^J1
  EXPECT_EQ(ad(g, g.e("P0"), w2(g, "K1", "J1")), -w2(g, "P1", "J1"));
  EXPECT_THROW(ad(g, build_g_2plus1().e("P0"), w2(g, "K1", "J1")), AlgebraMismatch);
}

TEST(Ad, IsDerivationAndAction) {
  const LieAlgebra g = build_g_lambda();
  std::mt19937 rng(41);
  std::uniform_int_distribution<std::size_t> basis(0, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const Vec x = g.e(basis(rng)), y = g.e(basis(rng));
    const Vec a = testsupport::random_wedge<1>(rng, 10, 3), b = testsupport::random_wedge<1>(rng, 10, 3);
    EXPECT_EQ(ad(g, x, wedge(a, b)), wedge(ad(g, x, a), b) + wedge(a, ad(g, x, b)));
    const Bivector w = testsupport::random_wedge<2>(rng, 10, 4, true);
    EXPECT_EQ(ad(g, g.bracket(x, y), w), ad(g, x, ad(g, y, w)) - ad(g, y, ad(g, x, w)));
    const Trivector t = testsupport::random_wedge<3>(rng, 10, 4);
    EXPECT_EQ(ad(g, g.bracket(x, y), t), ad(g, x, ad(g, y, t)) - ad(g, y, ad(g, x, t)));
  }
}

TEST(Wedge, SlotsAndSigns) {
  EXPECT_EQ(wedge_slots<2>(10).size(), 45u);
  EXPECT_EQ(wedge_slots<3>(10).size(), 120u);
  const Bivector a = Bivector::basis(10, {3, 1});
  EXPECT_EQ(a.coeff({1, 3}), Scalar(-1L));
  EXPECT_TRUE(Bivector::basis(10, {2, 2}).is_zero());
  EXPECT_EQ(Trivector::basis(10, {2, 0, 1}).coeff({0, 1, 2}), Scalar(1L));
  EXPECT_EQ(Trivector::basis(10, {1, 0, 2}).coeff({0, 1, 2}), Scalar(-1L));
  EXPECT_THROW(Bivector(10) + Bivector(6), AlgebraMismatch);
}

namespace {

/// Numeric rank of the invariance system at a rational Lambda, via SVD.
std::size_t numeric_invariant_dimension(const LieAlgebra& g, const Rational& lambda) {
  const LinearSystem sys = invariance_system(g).specialize({{Var::Lambda, lambda}});
  Eigen::MatrixXd m(sys.row_count(), sys.col_count());
  for (std::size_t i = 0; i < sys.row_count(); ++i)
    for (std::size_t j = 0; j < sys.col_count(); ++j) m(i, j) = sys.rows[i][j].constant_value().get_d();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > 1e-9 * s(0)) ++rank;
  return sys.col_count() - rank;
}

}  // namespace

TEST(InvariantTrivectors, AbelianAlgebraKeepsEverything) {
  const LieAlgebra a("abelian4", {"X1", "X2", "X3", "X4"});
  EXPECT_EQ(invariant_trivectors(a).dimension, 4u);
}

TEST(InvariantTrivectors, GLambdaMatchesNumericRank) {
  const LieAlgebra g = build_g_lambda();
  const SolutionSpace s = invariant_trivectors(g);
  for (const Rational& l : {make_rational(3, 7), make_rational(-5, 2), make_rational(11, 13)})
    EXPECT_EQ(s.dimension, numeric_invariant_dimension(g, l)) << l.get_str();
  for (const auto& v : s.basis) EXPECT_TRUE(is_invariant(g, trivector_from(g, v)));
}

TEST(InvariantTrivectors, LorentzAlgebra) {
  const LieAlgebra so31 = build_lorentz();
  const SolutionSpace s = invariant_trivectors(so31);
  EXPECT_EQ(s.dimension, numeric_invariant_dimension(so31, Rational(0)));
  EXPECT_GE(s.dimension, 1u);
  for (const auto& v : s.basis) EXPECT_TRUE(is_invariant(so31, trivector_from(so31, v)));
}
