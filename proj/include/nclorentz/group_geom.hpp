#pragma once

// Numeric group geometry: exponential chart of second kind, invariant
// vector fields, the Sklyanin bracket and its projection to spacetime and
// to the ambient space.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "nclorentz/jet.hpp"
#include "nclorentz/kinematical.hpp"
#include "nclorentz/poisson_poly.hpp"
#include "nclorentz/representation.hpp"
#include "nclorentz/scaling.hpp"

namespace nclorentz {

enum class Kinematics { relativistic, newtonian, carrollian };

inline std::string to_string(Kinematics k) {
  switch (k) {
    case Kinematics::relativistic:
      return "relativistic";
    case Kinematics::newtonian:
      return "newtonian";
    case Kinematics::carrollian:
      return "carrollian";
  }
  return "?";
}

inline ScalingMap scaling_for(Kinematics k, PhsType t) {
  switch (k) {
    case Kinematics::newtonian:
      return newtonian_map(t);
    case Kinematics::carrollian:
      return carrollian_map(t);
    default:
      return identity_scaling();
  }
}

/// Lie algebra plus faithful 5x5 representation for one kinematics.
struct GeometryModel {
  Kinematics kind;
  LieAlgebra g;
  Representation rho;
};

inline GeometryModel geometry_model(Kinematics k) {
  if (k == Kinematics::relativistic) return {k, build_g_lambda(), rho_g_lambda()};
  const ScalingMap m = scaling_for(k, PhsType::I);
  const auto g = build_g_lambda();
  return {k, contract_algebra(g, m, to_string(k)), contract_representation(rho_g_lambda(), m)};
}

using Mat = Eigen::MatrixXd;

inline std::vector<Mat> numeric_rep(const Representation& rho, double lambda) {
  std::vector<Mat> out;
  const std::map<Var, double> b{{Var::Lambda, lambda}};
  for (std::size_t g = 0; g < rho.mats.size(); ++g) {
    Mat m(rho.size, rho.size);
    for (std::size_t r = 0; r < rho.size; ++r)
      for (std::size_t c = 0; c < rho.size; ++c) m(r, c) = rho.at(g, r, c).evaluate(b);
    out.push_back(m);
  }
  return out;
}

/// Matrix exponential by scaling and squaring of a Taylor series.
inline Mat expm(const Mat& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Mat b = a / std::ldexp(1.0, s);
  Mat sum = Mat::Identity(a.rows(), a.cols()), term = sum;
  for (int k = 1; k < 40; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-17) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

/// Square matrix of jets: value and partials in each chart coordinate.
template <int N>
struct JetMatrix {
  std::size_t n = 0;
  std::vector<Jet<N>> e;

  explicit JetMatrix(std::size_t size) : n(size), e(size * size) {}
  Jet<N>& operator()(std::size_t r, std::size_t c) { return e[r * n + c]; }
  const Jet<N>& operator()(std::size_t r, std::size_t c) const { return e[r * n + c]; }

  Mat value() const {
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = (*this)(r, c).v;
    return m;
  }
  Mat partial(int k) const {
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = (*this)(r, c).d[k];
    return m;
  }
  friend JetMatrix operator*(const JetMatrix& a, const JetMatrix& b) {
    JetMatrix out(a.n);
    for (std::size_t r = 0; r < a.n; ++r)
      for (std::size_t k = 0; k < a.n; ++k) {
        const Jet<N>& x = a(r, k);
        if (x.v == 0.0 && std::all_of(x.d.begin(), x.d.end(), [](double d) { return d == 0.0; })) continue;
        for (std::size_t c = 0; c < a.n; ++c) out(r, c) += x * b(k, c);
      }
    return out;
  }
};

/// G(p) = exp(p_0 rho_0) ... exp(p_9 rho_9) with first derivatives.
inline JetMatrix<10> group_element_jet(const std::vector<Mat>& rho, const std::array<double, 10>& p) {
  const std::size_t n = static_cast<std::size_t>(rho.at(0).rows());
  JetMatrix<10> g(n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = Jet<10>(1.0);
  for (int k = 0; k < 10; ++k) {
    const Mat e = expm(p[k] * rho[k]);
    const Mat de = rho[k] * e;
    JetMatrix<10> f(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        f(r, c).v = e(r, c);
        f(r, c).d[k] = de(r, c);
      }
    g = g * f;
  }
  return g;
}

inline Mat group_element(const std::vector<Mat>& rho, const std::array<double, 10>& p) {
  Mat g = Mat::Identity(rho.at(0).rows(), rho.at(0).cols());
  for (int k = 0; k < 10; ++k) g = g * expm(p[k] * rho[k]);
  return g;
}

/// diag(1, -Lambda, Lambda, Lambda, Lambda), preserved by G: G^T I G = I.
inline Mat ambient_metric(double lambda) {
  Mat m = Mat::Identity(5, 5) * lambda;
  m(0, 0) = 1.0;
  m(1, 1) = -lambda;
  return m;
}

/// Columns are the invariant fields in chart components: left(a, i) = (X^L_i)^a.
struct InvariantFields {
  Mat left, right;
  double condition = 0.0;
};

inline InvariantFields invariant_fields(const std::vector<Mat>& rho, const std::array<double, 10>& p,
                                        double max_condition = 1e12) {
  const auto g = group_element_jet(rho, p);
  const Mat gv = g.value();
  const Mat ginv = gv.inverse();
  const Eigen::Index n = gv.rows();
  Mat basis(n * n, 10);
  for (int i = 0; i < 10; ++i) basis.col(i) = Eigen::Map<const Eigen::VectorXd>(rho[i].data(), n * n);
  const auto qr = basis.colPivHouseholderQr();
  Mat ml(10, 10), mr(10, 10);
  for (int a = 0; a < 10; ++a) {
    const Mat da = g.partial(a);
    const Mat l = ginv * da, r = da * ginv;
    ml.col(a) = qr.solve(Eigen::Map<const Eigen::VectorXd>(l.data(), n * n));
    mr.col(a) = qr.solve(Eigen::Map<const Eigen::VectorXd>(r.data(), n * n));
  }
  InvariantFields out;
  const Eigen::JacobiSVD<Mat> svl(ml), svr(mr);
  out.condition = std::max(svl.singularValues()(0) / svl.singularValues()(9),
                           svr.singularValues()(0) / svr.singularValues()(9));
  if (!std::isfinite(out.condition) || out.condition > max_condition)
    throw SingularChart("chart Jacobian condition number " + std::to_string(out.condition));
  out.left = ml.inverse();
  out.right = mr.inverse();
  return out;
}

/// Antisymmetric coefficient matrix R(i, j) = r^{ij} of r = sum_{i<j} r^{ij} e_i ^ e_j.
inline Mat numeric_r(const RMatrix& r, const std::map<Var, double>& bindings) {
  Mat m = Mat::Zero(static_cast<Eigen::Index>(r.dim()), static_cast<Eigen::Index>(r.dim()));
  for (const auto& [k, c] : r.coeffs()) {
    const double v = c.evaluate(bindings);
    m(k[0], k[1]) += v;
    m(k[1], k[0]) -= v;
  }
  return m;
}

/// Overall sign of the Sklyanin bracket relative to X^L r X^L - X^R r X^R,
/// fixed once so that the flat type III bracket reads {x0, x1} = z (x0 + x1) x2.
inline constexpr double kSklyaninSign = 1.0;

/// Pi^{ab} on the 10 chart coordinates at p.
inline Mat sklyanin_bracket(const std::vector<Mat>& rho, const Mat& r, const std::array<double, 10>& p) {
  const auto f = invariant_fields(rho, p);
  return kSklyaninSign * (f.left * r * f.left.transpose() - f.right * r * f.right.transpose());
}

/// Spacetime block {x^mu, x^nu} at the section xi = theta = 0.
inline Eigen::Matrix4d phs_brackets(const std::vector<Mat>& rho, const Mat& r, const std::array<double, 4>& x) {
  std::array<double, 10> p{};
  for (int i = 0; i < 4; ++i) p[i] = x[i];
  return sklyanin_bracket(rho, r, p).topLeftCorner<4, 4>();
}

/// Ambient coordinates (s4, s0, s1, s2, s3) of the point with parallel
/// coordinates x, i.e. the first column of exp(x0 P0) ... exp(x3 P3).
template <typename T>
std::array<T, 5> ambient_map(Kinematics k, const std::array<T, 4>& x, double lambda) {
  const auto [c0, s0] = lambda_trig(lambda, x[0]);
  if (k == Kinematics::newtonian) return {c0, s0, x[1], x[2], x[3]};
  const auto [ch1, sh1] = lambda_trig(-lambda, x[1]);
  const auto [ch2, sh2] = lambda_trig(-lambda, x[2]);
  const auto [ch3, sh3] = lambda_trig(-lambda, x[3]);
  const T c123 = ch1 * ch2 * ch3;
  if (k == Kinematics::carrollian) return {c123, x[0] * c123, sh1 * ch2 * ch3, sh2 * ch3, sh3};
  return {c0 * c123, s0 * c123, sh1 * ch2 * ch3, sh2 * ch3, sh3};
}

/// Jacobian ds/dx (5 x 4).
inline Eigen::Matrix<double, 5, 4> ambient_jacobian(Kinematics k, const std::array<double, 4>& x, double lambda) {
  std::array<Jet<4>, 4> xj;
  for (int i = 0; i < 4; ++i) xj[i] = Jet<4>::variable(x[i], i);
  const auto s = ambient_map(k, xj, lambda);
  Eigen::Matrix<double, 5, 4> j;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 4; ++b) j(a, b) = s[a].d[b];
  return j;
}

inline std::array<double, 5> ambient_point(Kinematics k, const std::array<double, 4>& x, double lambda) {
  return ambient_map(k, x, lambda);
}

/// {s^a, s^b} = J Pi J^T.
inline Eigen::Matrix<double, 5, 5> push_forward(Kinematics k, const std::array<double, 4>& x, double lambda,
                                               const Eigen::Matrix4d& pi) {
  const auto j = ambient_jacobian(k, x, lambda);
  return j * pi * j.transpose();
}

/// sum_a dC/ds^a {s^a, s^b}, largest entry.
inline double casimir_residual(const Poly& casimir, const std::array<double, 5>& s,
                               const Eigen::Matrix<double, 5, 5>& brackets, const std::map<Var, double>& b) {
  const std::vector<double> pt(s.begin(), s.end());
  Eigen::Matrix<double, 1, 5> grad;
  for (std::size_t a = 0; a < 5; ++a) grad(0, static_cast<Eigen::Index>(a)) = casimir.derivative(a).evaluate(pt, b);
  return (grad * brackets).cwiseAbs().maxCoeff();
}

/// Ambient table evaluated at s.
inline Eigen::Matrix<double, 5, 5> evaluate_table(const PolyPoissonAlgebra& alg, const std::array<double, 5>& s,
                                                  const std::map<Var, double>& b) {
  const std::vector<double> pt(s.begin(), s.end());
  Eigen::Matrix<double, 5, 5> m = Eigen::Matrix<double, 5, 5>::Zero();
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t c = a + 1; c < 5; ++c) {
      m(a, c) = alg.at(a, c).evaluate(pt, b);
      m(c, a) = -m(a, c);
    }
  return m;
}

/// Brackets of the Beltrami coordinates q^mu = s^mu / s4 obtained from the
/// ambient brackets by the chain rule.
inline Eigen::Matrix4d beltrami_brackets(const std::array<double, 5>& s, const Eigen::Matrix<double, 5, 5>& brackets) {
  Eigen::Matrix<double, 4, 5> j = Eigen::Matrix<double, 4, 5>::Zero();
  for (int m = 0; m < 4; ++m) {
    j(m, 0) = -s[m + 1] / (s[0] * s[0]);
    j(m, m + 1) = 1.0 / s[0];
  }
  return j * brackets * j.transpose();
}

}  // namespace nclorentz
