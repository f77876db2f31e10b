#pragma once

// Closed-form Poisson brackets {x^mu, x^nu} of the noncommutative spacetimes in
// geodesic parallel coordinates, and the matching ambient tables.

#include <Eigen/Dense>
#include <array>
#include <map>

#include "nclorentz/group_geom.hpp"
#include "nclorentz/poisson_poly.hpp"
#include "nclorentz/rmatrices.hpp"

namespace nclorentz {

struct PhsParameters {
  double lambda = 0.0;
  double z = 1.0;
  double zp = 0.0;
  std::map<Var, double> bindings() const { return {{Var::Lambda, lambda}, {Var::z, z}, {Var::zp, zp}}; }
};

namespace detail {

inline void put(Eigen::Matrix4d& m, int a, int b, double v) {
  m(a, b) = v;
  m(b, a) = -v;
}

}  // namespace detail

/// Reference local brackets. Only antisymmetric entries are filled.
inline Eigen::Matrix4d local_reference(Kinematics k, PhsType t, const std::array<double, 4>& x, const PhsParameters& q) {
  using detail::put;
  const double l = q.lambda, z = q.z, zp = q.zp;
  const auto [c0, s0] = lambda_trig(l, x[0]);
  const auto [ch1, sh1] = lambda_trig(-l, x[1]);
  const auto [ch2, sh2] = lambda_trig(-l, x[2]);
  const auto [ch3, sh3] = lambda_trig(-l, x[3]);
  const double t1 = sh1 / ch1, t2 = sh2 / ch2, t3 = sh3 / ch3;
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();

  if (k == Kinematics::newtonian) {
    if (t == PhsType::II) {
      put(m, 1, 2, z * s0 * x[3]);
      put(m, 1, 3, -z * s0 * x[2]);
    } else {
      put(m, 1, 2, -z * s0 * s0);
      if (t == PhsType::I) put(m, 2, 3, zp * s0 * s0);
    }
    return m;
  }
  if (k == Kinematics::carrollian) {
    if (t == PhsType::II) {
      put(m, 0, 2, z * t1 * ch2 * t3);
      put(m, 0, 3, -z * t1 * sh2);
    }
    return m;
  }

  const double a = s0 * ch1 + sh1;
  const double b = ch1 - l * s0 * sh1;
  switch (t) {
    case PhsType::I:
      put(m, 0, 1, z * a * c0 * t2);
      put(m, 0, 2, -z * c0 / ch1 * (a * sh1 + t3 * t3) - zp * a * c0 * ch2 / ch1 * t3);
      put(m, 0, 3, z * c0 / ch1 * t2 * t3 + zp * a * c0 / ch1 * sh2);
      put(m, 1, 2, -z * (a * s0 - b * t3 * t3) + zp * a * b * ch2 * t3);
      put(m, 1, 3, -z * b * t2 * t3 - zp * a * b * sh2);
      put(m, 2, 3, z * a * t3 + zp * a * a * ch2);
      break;
    case PhsType::II:
      put(m, 0, 2, z * c0 * t1 * ch2 * t3);
      put(m, 0, 3, -z * c0 * t1 * sh2);
      put(m, 1, 2, z * s0 * ch2 * t3);
      put(m, 1, 3, -z * s0 * sh2);
      break;
    case PhsType::III:
      put(m, 0, 1, z * a * c0 * t2);
      put(m, 0, 2, -z * a * c0 * t1);
      put(m, 1, 2, -z * a * s0);
      break;
  }
  return m;
}

/// Ambient quadratic table on (s4, s0, s1, s2, s3), s4 central.
inline PolyPoissonAlgebra ambient_reference(Kinematics k, PhsType t) {
  namespace pt = poisson_tables;
  if (k == Kinematics::newtonian) {
    if (t == PhsType::II) return pt::ambient(pt::newtonian_II());
    return pt::ambient(t == PhsType::I ? pt::newtonian_I() : pt::newtonian_I("s", zs(), Scalar()));
  }
  if (k == Kinematics::carrollian) return pt::ambient(t == PhsType::II ? pt::carrollian_II() : pt::carrollian_I());
  switch (t) {
    case PhsType::I:
      return pt::ambient(pt::type_I());
    case PhsType::II:
      return pt::ambient(pt::type_II());
    default:
      return pt::ambient(pt::type_III());
  }
}

/// r-matrix of the given type in the algebra of the model, contracted when
/// the model is a limit.
inline RMatrix model_rmatrix(Kinematics k, PhsType t) {
  const auto g = build_g_lambda();
  const RMatrix r = t == PhsType::I ? r_type_I(g) : t == PhsType::II ? r_type_II(g) : r_type_III(g);
  if (k == Kinematics::relativistic) return r;
  return contract_rmatrix(r, scaling_for(k, t));
}

}  // namespace nclorentz
