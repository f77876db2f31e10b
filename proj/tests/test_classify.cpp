#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <random>

#include "nclorentz/classify.hpp"

using namespace nclorentz;

namespace {

struct Algebras {
  LieAlgebra g = build_g_lambda();
  Subalgebra h = lorentz_subalgebra(g);
  LieAlgebra g3 = build_g_2plus1();
  Subalgebra h3 = make_subalgebra(g3, "h", {"K1", "K2", "J3"});
};

std::size_t numeric_nullity(const LinearSystem& sys) {
  Eigen::MatrixXd m(sys.row_count(), sys.col_count());
  for (std::size_t i = 0; i < sys.row_count(); ++i)
    for (std::size_t j = 0; j < sys.col_count(); ++j) m(i, j) = sys.rows[i][j].constant_value().get_d();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  return sys.col_count() - lu.rank();
}

void expect_kernel(const LinearSystem& sys, const SolutionSpace& s) {
  for (const auto& v : s.basis)
    for (const auto& e : sys.apply(v)) EXPECT_TRUE(e.is_zero());
}

std::vector<Scalar> column(const SolutionSpace& s, std::size_t k) { return s.basis.at(k); }

}  // namespace

TEST(TrivialLorentz, ThreePlusOneHasOnlyZero) {
  Algebras s;
  const LinearSystem sys = system_trivial_lorentz(s.g, s.h);
  EXPECT_EQ(sys.row_count(), 270u);
  EXPECT_EQ(sys.col_count(), 45u);
  EXPECT_FALSE(sys.contains(Var::Lambda));
  const SolveReport rep =
      solve_with_specials(sys, Var::Lambda, {Rational(0), Rational(1), Rational(-1), make_rational(3, 7)});
  EXPECT_EQ(rep.generic.dimension, 0u);
  EXPECT_TRUE(rep.rank_drops.empty());
  EXPECT_EQ(numeric_nullity(sys), 0u);
}

TEST(TrivialLorentz, EmptySubalgebraLeavesEverything) {
  Algebras s;
  const LinearSystem sys = system_trivial_lorentz(s.g, Subalgebra{"0", {}});
  EXPECT_EQ(sys.row_count(), 0u);
  EXPECT_EQ(solve(sys).dimension, 45u);
}

TEST(TrivialLorentz, TwoPlusOneSingleSolution) {
  Algebras s;
  const LinearSystem sys = system_trivial_lorentz(s.g3, s.h3);
  EXPECT_EQ(sys.row_count(), 45u);
  EXPECT_EQ(sys.col_count(), 15u);
  const SolutionSpace sol = solve(sys);
  ASSERT_EQ(sol.dimension, 1u);
  expect_kernel(sys, sol);
  const Bivector r = kernel_rmatrices(ansatz_2plus1(s.g3), sol)[0];
  const Bivector expected = w2(s.g3, "J3", "P0") - w2(s.g3, "P1", "K2") + w2(s.g3, "P2", "K1");
  const Scalar c1 = r.coeff(expected.coeffs().begin()->first).exact_div(expected.coeffs().begin()->second);
  EXPECT_EQ(r, expected.scaled(c1));
  // mCYBE on that direction leaves the single condition Lambda c1^2 = 0.
  const auto cond = distinct_conditions(mcybe_residual(s.g3, expected.scaled(Scalar::var(Var::c1))));
  ASSERT_EQ(cond.size(), 1u);
  EXPECT_EQ(cond[0], Lam() * Scalar::var(Var::c1, 2));
}

TEST(SubBialgebra, ThreePlusOneReducesToLorentzSquare) {
  Algebras s;
  const LinearSystem sys = system_sub_bialgebra(s.g, s.h);
  EXPECT_EQ(sys.row_count(), 180u);
  EXPECT_FALSE(sys.contains(Var::Lambda));
  const SolveReport rep = solve_with_specials(sys, Var::Lambda, {Rational(0), Rational(1), Rational(-1)});
  EXPECT_EQ(rep.generic.dimension, 15u);
  EXPECT_TRUE(rep.rank_drops.empty());
  EXPECT_EQ(numeric_nullity(sys), 15u);
  expect_kernel(sys, rep.generic);
  const AnsatzR a = general_ansatz(s.g);
  const auto zero = forced_zero(a, rep.generic);
  EXPECT_EQ(zero.size(), 30u);
  for (const auto& u : zero) EXPECT_NE(u.find('P'), std::string::npos) << u;
  for (const auto& r : kernel_rmatrices(a, rep.generic))
    for (const auto& [k, v] : r.coeffs()) EXPECT_TRUE(s.h.contains(k[0]) && s.h.contains(k[1]));
}

TEST(SubBialgebra, StableUnderPermutation) {
  Algebras s;
  LinearSystem sys = system_sub_bialgebra(s.g, s.h);
  std::mt19937 rng(99);
  std::shuffle(sys.rows.begin(), sys.rows.end(), rng);
  std::vector<std::size_t> perm(sys.col_count());
  for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = j;
  std::shuffle(perm.begin(), perm.end(), rng);
  LinearSystem p = sys;
  for (std::size_t i = 0; i < sys.row_count(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j) p.rows[i][j] = sys.rows[i][perm[j]];
  EXPECT_EQ(solve(sys).dimension, 15u);
  EXPECT_EQ(solve(p).dimension, 15u);
}

TEST(SubBialgebra, TwoPlusOneFamily) {
  Algebras s;
  const LinearSystem sys = system_sub_bialgebra(s.g3, s.h3);
  const SolutionSpace sol = solve(sys);
  EXPECT_EQ(sol.dimension, 4u);
  expect_kernel(sys, sol);
  const AnsatzR a = ansatz_2plus1(s.g3);
  EXPECT_EQ(forced_zero(a, sol),
            (std::vector<std::string>{"a1", "a3", "a4", "a5", "b1", "b3", "b4", "b5", "c3"}));
  // Every kernel vector has a6 = -c1 and b6 = c1.
  for (std::size_t k = 0; k < sol.dimension; ++k) {
    const auto v = column(sol, k);
    EXPECT_EQ(v[5], -v[12]);
    EXPECT_EQ(v[11], v[12]);
  }
  // The symbolic family lies in the kernel.
  const Bivector fam = family_2plus1(s.g3);
  for (std::size_t x : s.h3.indices) {
    const Bivector d = ad(s.g3, x, fam);
    for (const auto& [k, v] : d.coeffs()) EXPECT_TRUE(s.h3.contains(k[0]) && s.h3.contains(k[1]));
  }
}

TEST(SubBialgebra, TwoPlusOneConstraint) {
  Algebras s;
  const auto cond = distinct_conditions(mcybe_residual(s.g3, family_2plus1(s.g3)));
  ASSERT_EQ(cond.size(), 1u);
  EXPECT_EQ(cond[0], constraint_2plus1().normalized());
  EXPECT_EQ(cond[0], -constraint_2plus1());
}

TEST(SubBialgebra, LambdaOneBranches) {
  Algebras s;
  const std::map<Var, Rational> dS{{Var::Lambda, Rational(1)}};
  const Scalar c1 = Scalar::var(Var::c1), c2 = Scalar::var(Var::c2);
  // b2 = 0, a2 = -c2: the constraint collapses to c1^2 = 0.
  EXPECT_EQ(constraint_2plus1().substitute(Var::b2, Scalar()).substitute(Var::a2, -c2).substitute(dS),
            Scalar(-4L) * c1 * c1);
  const Bivector branch1 = family_2plus1(s.g3, -c2, Scalar(), c2, Scalar());
  EXPECT_EQ(branch1, r_lorentz_D(s.g3, c2));
  EXPECT_EQ(branch1, r_type_III(s.g3, c2));
  EXPECT_TRUE(schouten(s.g3, branch1).is_zero());
  // a2 = b2 = 0: c2^2 = 4 c1^2, representative c2 = 2 c1.
  EXPECT_EQ(constraint_2plus1().substitute(Var::a2, Scalar()).substitute(Var::b2, Scalar()).substitute(dS),
            c2 * c2 - Scalar(4L) * c1 * c1);
  const Bivector branch2 = family_2plus1(s.g3, Scalar(), Scalar(), Scalar(2L) * c1, c1);
  const Bivector expected =
      (w2(s.g3, "K1", "K2").scaled(2L) + w2(s.g3, "J3", "P0") - w2(s.g3, "P1", "K2") + w2(s.g3, "P2", "K1"))
          .scaled(c1);
  EXPECT_EQ(branch2, expected);
  const LieAlgebra g3ds = s.g3.map_coeffs([&](const Scalar& v) { return v.substitute(dS); }, "so31");
  EXPECT_TRUE(mcybe_residual(g3ds, branch2).vanishes());
  EXPECT_FALSE(mcybe_residual(s.g3, branch2).vanishes());
}

TEST(LorentzTable, Verdicts) {
  const auto rows = verify_lorentz_table();
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.mcybe_in_lorentz) << row.name;
    EXPECT_TRUE(row.schouten_invariant) << row.name;
  }
  EXPECT_FALSE(rows[0].triangular);
  EXPECT_TRUE(rows[1].triangular);
  EXPECT_FALSE(rows[2].triangular);
  EXPECT_TRUE(rows[3].triangular);
}

TEST(LorentzTable, TypeAEmbeddedNeedsAlphaBetaZero) {
  Algebras s;
  EXPECT_FALSE(mcybe_residual(s.g, r_lorentz_A(s.g)).vanishes());
  EXPECT_TRUE(mcybe_residual(s.g, r_lorentz_A(s.g, Scalar(), Scalar())).vanishes());
  EXPECT_TRUE(mcybe_residual(s.g, r_lorentz_B(s.g)).vanishes());
  EXPECT_TRUE(mcybe_residual(s.g, r_lorentz_D(s.g)).vanishes());
}

TEST(Prop2, ThreeFamilies) {
  const auto rows = verify_prop2();
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.in_hh) << row.name;
    EXPECT_TRUE(row.triangular) << row.name;
    EXPECT_TRUE(row.sub_bialgebra) << row.name;
    EXPECT_TRUE(row.nontrivial_on_h) << row.name;
  }
}
