#include <gtest/gtest.h>

#include <random>

#include "nclorentz/quantize.hpp"
#include "nclorentz/rmatrices.hpp"

using namespace nclorentz;
namespace nq = nclorentz::nc_algebras;
namespace pt = nclorentz::poisson_tables;

namespace {

struct Pairing {
  NCAlgebra nc;
  PolyPoissonAlgebra poisson;
};

std::vector<Pairing> pairings() {
  return {
      {nq::type_I_zprime(), pt::null_plane(pt::type_I("x", Scalar(), zps()), "x", {"2", "3"})},
      {nq::type_I_z(), pt::null_plane(pt::type_I("x", zs(), Scalar()), "x", {"2", "3"})},
      {nq::type_I(), pt::null_plane(pt::type_I("x"), "x", {"2", "3"})},
      {nq::type_II(), pt::type_II("x")},
      {nq::type_III(), pt::null_plane(pt::type_III_2plus1("x"), "x", {"2"})},
      {nq::newtonian_I(), pt::newtonian_I()},
      {nq::newtonian_II(), pt::newtonian_II()},
      {nq::carrollian_I(), pt::carrollian_I()},
      {nq::carrollian_II(), pt::carrollian_II()},
      {nq::newtonian_I("x"), pt::newtonian_I("x")},
      {nq::newtonian_II("x"), pt::newtonian_II("x")},
      {nq::carrollian_II("x"), pt::carrollian_II("x")},
  };
}

}  // namespace

TEST(Quantize, NormalFormExamples) {
  const auto t2 = nq::type_II();
  EXPECT_EQ(normal_form(t2, t2.word({"x2", "x0"})), t2.word({"x0", "x2"}) - t2.word({"x1", "x3"}, zs()));
  EXPECT_EQ(normal_form(t2, t2.word({"x0", "x1", "x3"})), t2.word({"x0", "x1", "x3"}));

  const auto t1 = nq::type_I_zprime();
  EXPECT_EQ(normal_form(t1, t1.word({"x2", "x-"})),
            t1.word({"x-", "x2"}) + t1.word({"x+", "x3"}, Scalar(2L) * zps()));
}

TEST(Quantize, CommutingPairsJustSwap) {
  const auto a = nq::carrollian_I();
  EXPECT_EQ(normal_form(a, a.word({"s3", "s2", "s1", "s0"})), a.word({"s0", "s1", "s2", "s3"}));
  EXPECT_TRUE(confluence_check(a).confluent());
}

TEST(Quantize, RulesMustBeOrdered) {
  NCAlgebra a("bad", {"a", "b"});
  EXPECT_THROW(a.relation("a", "b", a.word({"b", "a"})), Error);
}

TEST(Quantize, ConfluenceOfEveryAlgebra) {
  for (const auto& p : pairings()) {
    const auto rep = confluence_check(p.nc);
    EXPECT_TRUE(rep.confluent()) << p.nc.name() << " fails at " << (rep.failures.empty() ? "" : rep.failures[0].triple);
  }
  EXPECT_TRUE(confluence_check(nq::null_plane_linear_reference()).confluent());
}

TEST(Quantize, PlainSuperpositionIsNotConfluent) {
  const auto a = nq::type_I("x", zs(), zps(), false);
  const auto rep = confluence_check(a);
  ASSERT_EQ(rep.failures.size(), 1u);
  EXPECT_EQ(rep.failures[0].triple, "x2 x3 x-");
  EXPECT_EQ(rep.failures[0].difference, a.word({"x+", "x+", "x+"}, -Scalar(2L) * zs() * zs() * zps()));
  EXPECT_FALSE(central_check(a, nq::null_plane_casimir(a)));
}

TEST(Quantize, CorruptedCoefficientBreaksConfluence) {
  auto a = nq::type_I();
  // double the z part of [x-, x+]
  a.relation("x-", "x+", a.word({"x+", "x2"}, Scalar(4L) * zs()));
  const auto rep = confluence_check(a);
  ASSERT_FALSE(rep.confluent());
  EXPECT_FALSE(rep.failures.front().triple.empty());
  EXPECT_FALSE(rep.failures.front().difference.is_zero());
}

TEST(Quantize, QuantumCasimirs) {
  for (const auto& a : {nq::type_I_zprime(), nq::type_I_z(), nq::type_I()})
    EXPECT_TRUE(central_check(a, nq::null_plane_casimir(a))) << a.name();
  const auto t3 = nq::type_III();
  EXPECT_TRUE(central_check(t3, nq::null_plane_casimir(t3)));
  const auto z0 = nq::type_I_zprime();
  EXPECT_TRUE(central_check(z0, z0.gen("x+")));
  EXPECT_FALSE(central_check(nq::type_I_z(), nq::type_I_z().gen("x+")));
  // the linear reference has no quadratic Casimir of this form
  const auto lin = nq::null_plane_linear_reference();
  EXPECT_FALSE(central_check(lin, nq::null_plane_casimir(lin)));
}

TEST(Quantize, ContractedCentralities) {
  const auto n1 = nq::newtonian_I(), n2 = nq::newtonian_II(), c2 = nq::carrollian_II();
  EXPECT_TRUE(central_check(n1, n1.gen("s0")));
  EXPECT_TRUE(central_check(n2, n2.gen("s0")));
  EXPECT_TRUE(central_check(n2, n2.word({"s2", "s2"}) + n2.word({"s3", "s3"})));
  EXPECT_TRUE(central_check(c2, c2.gen("s1")));
  EXPECT_TRUE(central_check(c2, c2.word({"s2", "s2"}) + c2.word({"s3", "s3"})));
  // s0 acts as a rotation on (s2, s3)
  EXPECT_EQ(normal_form(c2, c2.commutator(c2.gen("s0"), c2.gen("s2"))), c2.word({"s1", "s3"}, zs()));
}

TEST(Quantize, SemiclassicalLimitIsExact) {
  for (const auto& p : pairings()) {
    if (p.nc.name() == "type I null-plane") continue;
    const auto rep = semiclassical_check(p.nc, p.poisson);
    for (const auto& e : rep.entries)
      EXPECT_TRUE(e.matches()) << p.nc.name() << " " << e.pair << ": " << e.commutator.to_string(p.poisson.generators())
                               << " vs " << e.poisson.to_string(p.poisson.generators());
  }
  const auto t3 = nq::type_III();
  const auto pois = pt::null_plane(pt::type_III_2plus1("x"), "x", {"2"});
  EXPECT_EQ(to_commutative(t3, normal_form(t3, t3.commutator(t3.gen("x-"), t3.gen("x+"))), pois),
            (Scalar(2L) * zs()) * (pois.gen("x+") * pois.gen("x2")));
}

TEST(Quantize, SymmetricReadingDiffersAtSecondOrder) {
  const auto a = nq::type_I();
  const auto pois = pt::null_plane(pt::type_I("x"), "x", {"2", "3"});
  const auto rep = semiclassical_check(a, pois);
  EXPECT_TRUE(rep.ok_first_order());
  for (const auto& e : rep.entries) {
    if (e.pair == "x-,x3") {
      EXPECT_EQ(e.commutator - e.poisson, (zs() * zps()) * (pois.gen("x+") * pois.gen("x+")));
    } else {
      EXPECT_TRUE(e.matches()) << e.pair;
    }
  }
}

TEST(Quantize, StrategiesAgreeAndTerminate) {
  std::mt19937 rng(3);
  for (const auto& p : pairings()) {
    std::uniform_int_distribution<int> letter(0, static_cast<int>(p.nc.size()) - 1), len(2, 8);
    for (int t = 0; t < 15; ++t) {
      Word w(static_cast<std::size_t>(len(rng)));
      for (auto& l : w) l = static_cast<std::uint8_t>(letter(rng));
      const auto l = normal_form(p.nc, w, Strategy::leftmost, 200000);
      const auto r = normal_form(p.nc, w, Strategy::rightmost, 200000);
      EXPECT_EQ(l, r) << p.nc.name();
      for (const auto& [word, c] : l.terms) EXPECT_TRUE(std::is_sorted(word.begin(), word.end()));
    }
  }
}

TEST(Quantize, StepBoundRaises) {
  const auto a = nq::type_I();
  EXPECT_THROW(normal_form(a, Word{2, 3, 2, 3, 3, 1, 1, 0}, Strategy::leftmost, 3), NonTermination);
}

TEST(Quantize, FirstOrderVanishing) {
  const auto g = build_g_lambda();
  EXPECT_TRUE(first_order_vanishing(g, cocommutator(g, r_type_I(g))));
  EXPECT_TRUE(first_order_vanishing(g, cocommutator(g, r_type_II(g))));
  EXPECT_TRUE(first_order_vanishing(g, cocommutator(g, r_type_III(g))));
  Cocommutator zero;
  zero.images.assign(g.dim(), Bivector(g.dim()));
  EXPECT_TRUE(first_order_vanishing(g, zero));
  auto kappa = cocommutator(g, r_type_II(g));
  kappa.images[g.index_of("P1")] += w2(g, "P1", "P0");
  EXPECT_FALSE(first_order_vanishing(g, kappa));
}
