#pragma once

// Newtonian and Carrollian contractions of the three Lie bialgebras with
// quantum Lorentz subgroup, their Poisson homogeneous spaces and the
// corresponding quantum spaces.

#include <random>
#include <string>
#include <vector>

#include "nclorentz/bialgebra.hpp"
#include "nclorentz/group_geom.hpp"
#include "nclorentz/phs_reference.hpp"
#include "nclorentz/quantize.hpp"
#include "nclorentz/rmatrices.hpp"
#include "nclorentz/scaling.hpp"

namespace nclorentz {

struct ContractionCell {
  Kinematics kind;
  PhsType type;
  std::string name() const { return to_string(kind) + " " + to_string(type); }
};

inline std::vector<ContractionCell> contraction_cells() {
  std::vector<ContractionCell> out;
  for (auto k : {Kinematics::newtonian, Kinematics::carrollian})
    for (auto t : {PhsType::I, PhsType::II, PhsType::III}) out.push_back({k, t});
  return out;
}

inline RMatrix relativistic_rmatrix(const LieAlgebra& g, PhsType t) {
  return t == PhsType::I ? r_type_I(g) : t == PhsType::II ? r_type_II(g) : r_type_III(g);
}

/// Both routes to the contracted cocommutator.
struct LbcResult {
  LieAlgebra algebra;
  RMatrix r;
  Cocommutator from_r;
  Cocommutator contracted;
  bool consistent() const {
    if (from_r.dim() != contracted.dim()) return false;
    for (std::size_t i = 0; i < from_r.dim(); ++i)
      if (!(from_r.images[i] == contracted.images[i])) return false;
    return true;
  }
};

/// Throws DivergentLimit if either the r-matrix or the cocommutator diverges.
inline LbcResult lbc_check(const LieAlgebra& g, const RMatrix& r, const ScalingMap& m) {
  LieAlgebra gc = contract_algebra(g, m, g.name() + " " + m.name);
  RMatrix rc = contract_rmatrix(r, m);
  Cocommutator from_r = cocommutator(gc, rc);
  Cocommutator contracted = contract_cocommutator(g, cocommutator(g, r), m);
  return {std::move(gc), std::move(rc), std::move(from_r), std::move(contracted)};
}

inline bool lbc_consistency(const RMatrix& r, const ScalingMap& m) {
  return lbc_check(build_g_lambda(), r, m).consistent();
}

/// Contracted r-matrices as listed for both limits; type III is type I at z' = 0.
inline RMatrix expected_contracted_rmatrix(const LieAlgebra& g, PhsType t) {
  switch (t) {
    case PhsType::I:
      return w2(g, "K1", "K2").scaled(zs()) - w2(g, "K2", "K3").scaled(zps());
    case PhsType::II:
      return w2(g, "K1", "J1").scaled(zs());
    default:
      return w2(g, "K1", "K2").scaled(zs());
  }
}

/// Primitive generators among the basis elements.
inline std::vector<std::string> basis_primitives(const LieAlgebra& g, const Cocommutator& d) {
  std::vector<NamedElement> basis;
  for (std::size_t i = 0; i < g.dim(); ++i) basis.push_back({g.labels()[i], g.e(i)});
  return primitive_generators(d, basis);
}

/// h = span{K, J} is a sub-bialgebra with non-zero cocommutator.
inline bool euclidean_sub_bialgebra(const LieAlgebra& g, const Cocommutator& d) {
  const auto h = make_subalgebra(g, "iso(3)", {"K1", "K2", "K3", "J1", "J2", "J3"});
  if (!is_sub_bialgebra(d, h)) return false;
  for (auto i : h.indices)
    if (!d.images[i].is_zero()) return true;
  return false;
}

/// A contracted noncommutative space with its Poisson counterpart.
struct ContractedSpace {
  std::string name;
  NCAlgebra quantum;
  PolyPoissonAlgebra poisson;
};

/// The Newtonian and Carrollian rows, in ambient coordinates.
inline std::vector<ContractedSpace> contracted_nc_spaces() {
  namespace nq = nc_algebras;
  namespace pt = poisson_tables;
  return {{"newtonian I", nq::newtonian_I(), pt::newtonian_I()},
          {"newtonian II", nq::newtonian_II(), pt::newtonian_II()},
          {"carrollian I", nq::carrollian_I(), pt::carrollian_I()},
          {"carrollian II", nq::carrollian_II(), pt::carrollian_II()}};
}

/// Flat (Galilei and Carroll) spaces in which local and ambient coordinates coincide.
inline std::vector<ContractedSpace> flat_contracted_spaces() {
  namespace nq = nc_algebras;
  namespace pt = poisson_tables;
  return {{"galilei I", nq::newtonian_I("x"), pt::newtonian_I("x")},
          {"galilei II", nq::newtonian_II("x"), pt::newtonian_II("x")},
          {"carroll II", nq::carrollian_II("x"), pt::carrollian_II("x")}};
}

/// Ambient table of a relativistic space contracted coefficient-wise.
inline PolyPoissonAlgebra contracted_ambient_table(const ContractionCell& cell) {
  return contract_poisson(ambient_reference(Kinematics::relativistic, cell.type), scaling_for(cell.kind, cell.type),
                          cell.name());
}

/// Largest difference between the coefficient-wise contracted ambient
/// table and the push-forward of the bracket built from the contracted r.
inline double route_commutation_residual(const ContractionCell& cell, double lambda, const PhsParameters& params,
                                         int samples, unsigned seed) {
  const auto table = contracted_ambient_table(cell);
  const auto model = geometry_model(cell.kind);
  const auto rho = numeric_rep(model.rho, lambda);
  PhsParameters q = params;
  q.lambda = lambda;
  const Mat r = numeric_r(model_rmatrix(cell.kind, cell.type), q.bindings());
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  double worst = 0.0;
  for (int n = 0; n < samples; ++n) {
    const std::array<double, 4> x{u(rng), u(rng), u(rng), u(rng)};
    const auto s = ambient_point(cell.kind, x, lambda);
    const auto pushed = push_forward(cell.kind, x, lambda, phs_brackets(rho, r, x));
    worst = std::max(worst, (pushed - evaluate_table(table, s, q.bindings())).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace nclorentz
