#pragma once

// Builders for the kinematical algebra families: (A)dS/Poincare in 3+1 and
// 2+1 dimensions and their Newtonian and Carrollian contractions.

#include <string>
#include <vector>

#include "nclorentz/lie_algebra.hpp"

namespace nclorentz {

/// Fixed basis order used everywhere for the 10-dimensional algebras.
inline const std::vector<std::string>& kinematical_labels() {
  static const std::vector<std::string> labels = {"P0", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3"};
  return labels;
}

inline const std::vector<std::string>& kinematical_labels_2plus1() {
  static const std::vector<std::string> labels = {"P0", "P1", "P2", "K1", "K2", "J3"};
  return labels;
}

namespace detail {

inline int levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  return ((a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1)) ? 1 : -1;
}

/// Coefficients of the brackets that differ between the 3+1 families:
/// [K_a,P_0] = kp0 P_a, [K_a,P_b] = kp delta_ab P_0, [K_a,K_b] = kk eps_abc J_c,
/// [P_0,P_a] = p0p K_a, [P_a,P_b] = pp eps_abc J_c. Rotations act as vectors on P, K, J.
struct KinematicalCoefficients {
  Scalar kp0, kp, kk, p0p, pp;
};

inline LieAlgebra build_kinematical(const std::string& name, const KinematicalCoefficients& k) {
  LieAlgebra g(name, kinematical_labels());
  const std::size_t n = g.dim();
  auto P = [](int a) { return static_cast<std::size_t>(a); };      // a = 0..3
  auto K = [](int a) { return static_cast<std::size_t>(3 + a); };  // a = 1..3
  auto J = [](int a) { return static_cast<std::size_t>(6 + a); };
  auto v = [n](std::size_t i, const Scalar& c) { return Vec::basis(n, {i}, c); };

  for (int a = 1; a <= 3; ++a)
    for (int b = a + 1; b <= 3; ++b) {
      const int c = 6 - a - b;
      const long eps = levi_civita(a, b, c);
      g.set_bracket(J(a), J(b), v(J(c), Scalar(eps)));
      g.set_bracket(K(a), K(b), v(J(c), k.kk * Scalar(eps)));
      g.set_bracket(P(a), P(b), v(J(c), k.pp * Scalar(eps)));
    }
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      if (a == b) {
        g.set_bracket(K(a), P(b), v(P(0), k.kp));
        continue;
      }
      const int c = 6 - a - b;
      const long eps = levi_civita(a, b, c);
      g.set_bracket(J(a), P(b), v(P(c), Scalar(eps)));
      g.set_bracket(J(a), K(b), v(K(c), Scalar(eps)));
      g.set_bracket(K(a), P(b), Vec(n));
    }
    g.set_bracket(K(a), P(0), v(P(a), k.kp0));
    g.set_bracket(P(0), P(a), v(K(a), k.p0p));
  }
  return g;
}

}  // namespace detail

/// (A)dS / Poincare family with symbolic cosmological constant.
inline LieAlgebra build_g_lambda() {
  return detail::build_kinematical(
      "g_Lambda", {Scalar(1L), Scalar(1L), Scalar(-1L), -Lam(), Lam()});
}

inline LieAlgebra build_newtonian() {
  return detail::build_kinematical("newtonian", {Scalar(1L), Scalar(), Scalar(), -Lam(), Scalar()});
}

inline LieAlgebra build_carrollian() {
  return detail::build_kinematical("carrollian", {Scalar(), Scalar(1L), Scalar(), -Lam(), Lam()});
}

/// 2+1 counterpart: indices a,b in {1,2}, rotation J3 only.
inline LieAlgebra build_g_2plus1() {
  LieAlgebra g("g_Lambda_2plus1", kinematical_labels_2plus1());
  const std::size_t n = g.dim();
  auto v = [&](const std::string& l, const Scalar& c) { return Vec::basis(n, {g.index_of(l)}, c); };
  g.set_bracket("J3", "P1", v("P2", Scalar(1L)));
  g.set_bracket("J3", "P2", v("P1", Scalar(-1L)));
  g.set_bracket("J3", "K1", v("K2", Scalar(1L)));
  g.set_bracket("J3", "K2", v("K1", Scalar(-1L)));
  g.set_bracket("K1", "P0", v("P1", Scalar(1L)));
  g.set_bracket("K2", "P0", v("P2", Scalar(1L)));
  g.set_bracket("K1", "P1", v("P0", Scalar(1L)));
  g.set_bracket("K2", "P2", v("P0", Scalar(1L)));
  g.set_bracket("K1", "K2", v("J3", Scalar(-1L)));
  g.set_bracket("P0", "P1", v("K1", -Lam()));
  g.set_bracket("P0", "P2", v("K2", -Lam()));
  g.set_bracket("P1", "P2", v("J3", Lam()));
  return g;
}

/// Lorentz (or Euclidean, after contraction) isotropy subalgebra span{K, J}.
inline Subalgebra lorentz_subalgebra(const LieAlgebra& g) {
  std::vector<std::string> labels;
  for (const auto& l : g.labels())
    if (l[0] == 'K' || l[0] == 'J') labels.push_back(l);
  return make_subalgebra(g, "h", labels);
}

/// Translation sector span{P}; not a subalgebra when Lambda != 0.
inline std::vector<std::size_t> translation_indices(const LieAlgebra& g) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.labels()[i][0] == 'P') idx.push_back(i);
  return idx;
}

/// so(3,1) on (K1,K2,K3,J1,J2,J3).
inline LieAlgebra build_lorentz() {
  const LieAlgebra g = build_g_lambda();
  LieAlgebra h = restrict_to(g, lorentz_subalgebra(g));
  return h;
}

/// Linear combination of named generators, e.g. combo(g, {{"K2", 1}, {"J3", 1}}).
inline Vec combo(const LieAlgebra& g, const std::vector<std::pair<std::string, Scalar>>& terms) {
  Vec v(g.dim());
  for (const auto& [l, c] : terms) v += g.e(l).scaled(c);
  return v;
}

/// Wedge of two named generators.
inline Bivector w2(const LieAlgebra& g, const std::string& a, const std::string& b) {
  return Bivector::basis(g.dim(), {g.index_of(a), g.index_of(b)});
}

}  // namespace nclorentz
