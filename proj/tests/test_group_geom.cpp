#include <gtest/gtest.h>

#include <random>

#include "nclorentz/phs_reference.hpp"

using namespace nclorentz;

namespace {

const Kinematics kKinds[] = {Kinematics::relativistic, Kinematics::newtonian, Kinematics::carrollian};
const PhsType kTypes[] = {PhsType::I, PhsType::II, PhsType::III};
const double kLambdas[] = {0.0, 0.37, -0.61};

std::array<double, 10> random_point(std::mt19937& rng, double scale = 0.6) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::array<double, 10> p;
  for (auto& x : p) x = u(rng);
  return p;
}

std::array<double, 4> random_x(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  return {u(rng), u(rng), u(rng), u(rng)};
}

/// Central difference of a matrix-valued function of the chart point.
template <typename F>
Mat partial(F&& f, std::array<double, 10> p, int a, double h = 1e-5) {
  auto q = p;
  p[a] += h;
  q[a] -= h;
  return (f(p) - f(q)) / (2 * h);
}

/// [X, Y]^a = X^b d_b Y^a - Y^b d_b X^a for all pairs of columns.
Mat field_bracket(const std::function<Mat(const std::array<double, 10>&)>& fields, const std::array<double, 10>& p,
                  int i, int j) {
  const Mat x = fields(p);
  Mat out = Mat::Zero(10, 1);
  for (int b = 0; b < 10; ++b) {
    const Mat d = partial(fields, p, b);
    out += x(b, i) * d.col(j) - x(b, j) * d.col(i);
  }
  return out;
}

}  // namespace

TEST(GroupGeom, IdentityAtOrigin) {
  for (auto k : kKinds) {
    const auto rho = numeric_rep(geometry_model(k).rho, 0.37);
    const std::array<double, 10> zero{};
    EXPECT_TRUE(group_element(rho, zero).isIdentity(0.0));
    const auto f = invariant_fields(rho, zero);
    EXPECT_TRUE(f.left.isIdentity(1e-14));
    EXPECT_TRUE(f.right.isIdentity(1e-14));
  }
}

TEST(GroupGeom, RepresentationsAreHomomorphisms) {
  for (auto k : kKinds) {
    const auto m = geometry_model(k);
    EXPECT_TRUE(representation_violations(m.g, m.rho).empty()) << to_string(k);
  }
  EXPECT_EQ(geometry_model(Kinematics::newtonian).g, build_newtonian());
  EXPECT_EQ(geometry_model(Kinematics::carrollian).g, build_carrollian());
  // spatial translations become nilpotent in the Newtonian picture
  const auto n = geometry_model(Kinematics::newtonian).rho;
  EXPECT_EQ(n.at(1, 2, 0), Scalar(1L));
  EXPECT_TRUE(n.at(1, 0, 2).is_zero());
}

TEST(GroupGeom, ExponentialMatchesClosedForm) {
  for (double l : kLambdas) {
    const auto rho = numeric_rep(rho_g_lambda(), l);
    for (double x : {0.3, -1.7, 4.0}) {
      const Mat e = expm(x * rho[0]);
      const auto [c, s] = lambda_trig(l, x);
      EXPECT_NEAR(e(0, 0), c, 1e-13 * std::max(1.0, std::abs(c)));
      EXPECT_NEAR(e(1, 0), s, 1e-13 * std::max(1.0, std::abs(s)));
      EXPECT_NEAR(e(0, 1), l * s, 1e-13 * std::max(1.0, std::abs(s)));
    }
  }
}

TEST(GroupGeom, TrigKernels) {
  for (double l : {0.0, 0.37, -0.61, 2.0, -3.0})
    for (double x : {-2.0, -0.4, 0.0, 0.9, 3.1}) {
      const auto [c, s] = lambda_trig(l, x);
      const auto [cs, ss] = lambda_trig_series(l, x);
      EXPECT_NEAR(c, cs, 1e-13 * std::max(1.0, std::abs(c)));
      EXPECT_NEAR(s, ss, 1e-13 * std::max(1.0, std::abs(s)));
      EXPECT_NEAR(c * c - l * s * s, 1.0, 1e-12 * std::max(1.0, c * c));
    }
  const auto [c, s] = lambda_trig(-0.25, Jet<1>::variable(1.3, 0));
  EXPECT_NEAR(c.d[0], -0.25 * s.v, 1e-15);
  EXPECT_NEAR(s.d[0], c.v, 1e-15);
}

TEST(GroupGeom, GroupPreservesAmbientMetric) {
  std::mt19937 rng(1);
  for (double l : kLambdas) {
    const auto rho = numeric_rep(rho_g_lambda(), l);
    const Mat metric = ambient_metric(l);
    for (int t = 0; t < 10; ++t) {
      const Mat g = group_element(rho, random_point(rng));
      EXPECT_LT((g.transpose() * metric * g - metric).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(GroupGeom, AmbientMapIsOrbitOfOrigin) {
  std::mt19937 rng(2);
  for (auto k : kKinds)
    for (double l : kLambdas) {
      const auto rho = numeric_rep(geometry_model(k).rho, l);
      for (int t = 0; t < 10; ++t) {
        auto p = random_point(rng);
        const std::array<double, 4> x{p[0], p[1], p[2], p[3]};
        // the Lorentz part fixes the origin
        const Mat g = group_element(rho, p);
        const auto s = ambient_point(k, x, l);
        for (int a = 0; a < 5; ++a) EXPECT_NEAR(g(a, 0), s[a], 1e-13) << to_string(k);
        if (k == Kinematics::relativistic) {
          EXPECT_NEAR(s[0] * s[0] - l * s[1] * s[1] + l * (s[2] * s[2] + s[3] * s[3] + s[4] * s[4]), 1.0, 1e-12);
        }
      }
    }
}

TEST(GroupGeom, InvariantFieldCommutators) {
  std::mt19937 rng(3);
  for (auto k : kKinds) {
    const auto m = geometry_model(k);
    for (double l : {0.0, -0.61}) {
      const auto rho = numeric_rep(m.rho, l);
      const auto left = [&](const std::array<double, 10>& p) { return invariant_fields(rho, p).left; };
      const auto right = [&](const std::array<double, 10>& p) { return invariant_fields(rho, p).right; };
      const auto p = random_point(rng, 0.5);
      const auto f = invariant_fields(rho, p);
      for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
          Mat expect = Mat::Zero(10, 1);
          for (const auto& [key, c] : m.g.bracket(i, j).coeffs())
            expect += c.evaluate({{Var::Lambda, l}}) * f.left.col(key[0]);
          EXPECT_LT((field_bracket(left, p, i, j) - expect).cwiseAbs().maxCoeff(), 1e-6) << i << "," << j;
          Mat expect_r = Mat::Zero(10, 1);
          for (const auto& [key, c] : m.g.bracket(i, j).coeffs())
            expect_r -= c.evaluate({{Var::Lambda, l}}) * f.right.col(key[0]);
          EXPECT_LT((field_bracket(right, p, i, j) - expect_r).cwiseAbs().maxCoeff(), 1e-6) << i << "," << j;
        }
    }
  }
}

TEST(GroupGeom, LeftAndRightFieldsCommute) {
  std::mt19937 rng(4);
  const auto rho = numeric_rep(rho_g_lambda(), 0.37);
  const auto p = random_point(rng, 0.5);
  const auto both = [&](const std::array<double, 10>& q) {
    const auto f = invariant_fields(rho, q);
    Mat m(10, 20);
    m << f.left, f.right;
    return m;
  };
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) EXPECT_LT(field_bracket(both, p, i, 10 + j).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(GroupGeom, SingularChartIsReported) {
  const auto rho = numeric_rep(rho_g_lambda(), 0.0);
  std::array<double, 10> p{};
  p[4] = 0.3;
  EXPECT_THROW(invariant_fields(rho, p, 1.0 + 1e-12), SingularChart);
  EXPECT_NO_THROW(invariant_fields(rho, p));
}

TEST(GroupGeom, SignCalibration) {
  const auto rho = numeric_rep(rho_g_lambda(), 0.0);
  const Mat r = numeric_r(r_type_III(build_g_lambda()), {{Var::z, 1.0}});
  const auto pi = phs_brackets(rho, r, {1, 2, 3, 4});
  EXPECT_NEAR(pi(0, 1), 9.0, 1e-12);
}

TEST(GroupGeom, SklyaninBracketSatisfiesJacobi) {
  std::mt19937 rng(5);
  for (auto k : kKinds)
    for (auto t : {PhsType::I, PhsType::II}) {
      const auto m = geometry_model(k);
      const PhsParameters q{-0.61, 0.7, -1.3};
      const auto rho = numeric_rep(m.rho, q.lambda);
      const Mat r = numeric_r(model_rmatrix(k, t), q.bindings());
      const auto pi = [&](const std::array<double, 10>& p) { return sklyanin_bracket(rho, r, p); };
      const auto p = random_point(rng, 0.5);
      const Mat v = pi(p);
      std::array<Mat, 10> d;
      for (int e = 0; e < 10; ++e) d[e] = partial(pi, p, e);
      double worst = 0.0;
      for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b)
          for (int c = b + 1; c < 10; ++c) {
            double s = 0.0;
            for (int e = 0; e < 10; ++e)
              s += v(a, e) * d[e](b, c) + v(b, e) * d[e](c, a) + v(c, e) * d[e](a, b);
            worst = std::max(worst, std::abs(s));
          }
      EXPECT_LT(worst, 1e-6) << to_string(k) << " " << to_string(t);
    }
}

TEST(GroupGeom, LocalBracketsMatchClosedForms) {
  std::mt19937 rng(6);
  for (auto k : kKinds) {
    const auto m = geometry_model(k);
    for (auto t : kTypes)
      for (double l : kLambdas) {
        const PhsParameters q{l, 0.7, -1.3};
        const auto rho = numeric_rep(m.rho, l);
        const Mat r = numeric_r(model_rmatrix(k, t), q.bindings());
        for (int n = 0; n < 10; ++n) {
          const auto x = random_x(rng);
          const Eigen::Matrix4d diff = phs_brackets(rho, r, x) - local_reference(k, t, x, q);
          EXPECT_LT(diff.cwiseAbs().maxCoeff(), 1e-9) << to_string(k) << " " << to_string(t) << " Lambda=" << l;
        }
      }
  }
}

TEST(GroupGeom, AmbientBracketsCasimirsAndBeltrami) {
  std::mt19937 rng(7);
  for (auto k : kKinds) {
    const auto m = geometry_model(k);
    for (auto t : kTypes) {
      const auto table = ambient_reference(k, t);
      std::vector<Poly> casimirs{table.gen("s4")};
      const Poly s0 = table.gen("s0"), s1 = table.gen("s1"), s2 = table.gen("s2"), s3 = table.gen("s3");
      if (k == Kinematics::relativistic) casimirs.push_back(s0 * s0 - s1 * s1 - s2 * s2 - s3 * s3);
      if (k == Kinematics::newtonian) casimirs.push_back(s0);
      if (k == Kinematics::newtonian && t == PhsType::II) casimirs.push_back(s2 * s2 + s3 * s3);
      if (k == Kinematics::carrollian && t == PhsType::II) {
        casimirs.push_back(s1);
        casimirs.push_back(s2 * s2 + s3 * s3);
      }
      for (double l : kLambdas) {
        const PhsParameters q{l, 0.7, -1.3};
        const auto rho = numeric_rep(m.rho, l);
        const Mat r = numeric_r(model_rmatrix(k, t), q.bindings());
        for (int n = 0; n < 5; ++n) {
          const auto x = random_x(rng);
          const auto s = ambient_point(k, x, l);
          const auto amb = push_forward(k, x, l, phs_brackets(rho, r, x));
          const auto ref = evaluate_table(table, s, q.bindings());
          EXPECT_LT((amb - ref).cwiseAbs().maxCoeff(), 1e-9) << to_string(k) << " " << to_string(t);
          for (const auto& c : casimirs) EXPECT_LT(casimir_residual(c, s, amb, q.bindings()), 1e-9);
          // quadratic homogeneity carries the table over to q = s / s4
          std::array<double, 5> qs{1.0, s[1] / s[0], s[2] / s[0], s[3] / s[0], s[4] / s[0]};
          const Eigen::Matrix4d bel = beltrami_brackets(s, amb);
          const auto bref = evaluate_table(table, qs, q.bindings()).bottomRightCorner<4, 4>();
          EXPECT_LT((bel - bref).cwiseAbs().maxCoeff(), 1e-9);
        }
      }
    }
  }
}

TEST(GroupGeom, FlatLimitIsMinkowski) {
  std::mt19937 rng(8);
  const auto rho = numeric_rep(rho_g_lambda(), 0.0);
  const PhsParameters q{0.0, 0.7, -1.3};
  const Mat r = numeric_r(r_type_I(build_g_lambda()), q.bindings());
  const auto table = poisson_tables::type_I("x");
  for (int n = 0; n < 5; ++n) {
    const auto x = random_x(rng);
    const auto pi = phs_brackets(rho, r, x);
    const std::vector<double> pt(x.begin(), x.end());
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) EXPECT_NEAR(pi(a, b), table.at(a, b).evaluate(pt, q.bindings()), 1e-12);
  }
}
