#pragma once

// Named classical r-matrices. All are built by generator label so they can
// be placed in any algebra carrying those labels (g_Lambda, so(3,1), or a
// contracted algebra).

#include "nclorentz/kinematical.hpp"
#include "nclorentz/wedge.hpp"

namespace nclorentz {

inline Scalar half(const Scalar& s) { return s.scaled(make_rational(1, 2)); }

/// Two-parameter null-plane family.
inline Bivector r_type_I(const LieAlgebra& g, const Scalar& z = zs(), const Scalar& zp = zps()) {
  Bivector a = w2(g, "K1", "K2") + w2(g, "K1", "J3") - w2(g, "K3", "J1") - w2(g, "J1", "J2");
  Bivector b = w2(g, "K2", "K3") - w2(g, "K2", "J2") - w2(g, "K3", "J3") + w2(g, "J2", "J3");
  return a.scaled(z) - b.scaled(zp);
}

inline Bivector r_type_II(const LieAlgebra& g, const Scalar& z = zs()) { return w2(g, "K1", "J1").scaled(z); }

inline Bivector r_type_III(const LieAlgebra& g, const Scalar& z = zs()) {
  return (w2(g, "K1", "K2") + w2(g, "K1", "J3")).scaled(z);
}

// Lorentz-algebra families.

inline Bivector r_lorentz_A(const LieAlgebra& g, const Scalar& alpha = Scalar::var(Var::alpha),
                            const Scalar& beta = Scalar::var(Var::beta), const Scalar& eta = Scalar::var(Var::eta)) {
  return (w2(g, "J2", "J3") - w2(g, "K2", "K3")).scaled(alpha) +
         (w2(g, "K3", "J2") - w2(g, "K2", "J3")).scaled(beta) + w2(g, "K1", "J1").scaled(half(eta));
}

inline Bivector r_lorentz_B(const LieAlgebra& g, const Scalar& beta = Scalar::var(Var::beta),
                            const Scalar& chip = Scalar::var(Var::chip)) {
  Bivector a = w2(g, "K1", "K2") + w2(g, "K1", "J3") - w2(g, "K3", "J1") - w2(g, "J1", "J2");
  Bivector b = w2(g, "K2", "K3") - w2(g, "K2", "J2") - w2(g, "K3", "J3") + w2(g, "J2", "J3");
  return a.scaled(half(beta)) - b.scaled(half(chip));
}

inline Bivector r_lorentz_C(const LieAlgebra& g, const Scalar& gamma = Scalar::var(Var::gamma),
                            const Scalar& chip = Scalar::var(Var::chip)) {
  return w2(g, "K2", "K3").scaled(-(gamma + half(chip))) + w2(g, "J2", "J3").scaled(gamma - half(chip)) -
         w2(g, "K1", "J1").scaled(gamma) + (w2(g, "K2", "J2") + w2(g, "K3", "J3")).scaled(half(chip));
}

inline Bivector r_lorentz_D(const LieAlgebra& g, const Scalar& chi = Scalar::var(Var::chi)) {
  return (w2(g, "K1", "K2") + w2(g, "K1", "J3")).scaled(chi);
}

}  // namespace nclorentz
