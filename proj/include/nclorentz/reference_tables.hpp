#pragma once

// delta of r_I at z = 0, written out term by term in null-plane combinations.

#include <vector>

#include "nclorentz/kinematical.hpp"

namespace nclorentz {

/// Transcribed list, not computed from r.
inline std::vector<Bivector> null_plane_delta_zp(const LieAlgebra& g) {
  const Vec km = combo(g, {{"K3", 1L}, {"J2", -1L}});  // K3 - J2
  const Vec kp = combo(g, {{"K2", 1L}, {"J3", 1L}});   // K2 + J3
  const Vec pm = combo(g, {{"P0", 1L}, {"P1", -1L}});  // P0 - P1
  const Scalar zp = zps();
  const Bivector p01 = wedge(g.e("P2"), km).scaled(zp) - wedge(g.e("P3"), kp).scaled(zp);
  return {
      p01,
      p01,
      wedge(pm, km).scaled(zp),
      -wedge(pm, kp).scaled(zp),
      wedge(kp, km).scaled(Scalar(2L) * zp),
      -wedge(g.e("K1"), km).scaled(zp) - wedge(g.e("J1"), kp).scaled(zp),
      wedge(g.e("K1"), kp).scaled(zp) - wedge(g.e("J1"), km).scaled(zp),
      Bivector(g.dim()),
      wedge(g.e("K1"), kp).scaled(zp) - wedge(g.e("J1"), km).scaled(zp),
      wedge(g.e("K1"), km).scaled(zp) + wedge(g.e("J1"), kp).scaled(zp),
  };
}

}  // namespace nclorentz
