#pragma once

// Linear systems for r-matrices compatible with the Lorentz subalgebra, in
// 3+1 and 2+1 dimensions, and the checks on the named families.

#include <string>
#include <utility>
#include <vector>

#include "nclorentz/bialgebra.hpp"
#include "nclorentz/invariants.hpp"
#include "nclorentz/kinematical.hpp"
#include "nclorentz/linear_system.hpp"
#include "nclorentz/rmatrices.hpp"

namespace nclorentz {

/// r = sum_k u_k * slots[k] with unknown coefficients u_k.
struct AnsatzR {
  std::vector<std::string> unknowns;
  std::vector<Bivector> slots;

  std::size_t size() const { return slots.size(); }

  Bivector assemble(const std::vector<Scalar>& values) const {
    Bivector r(slots.at(0).dim());
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (!values.at(k).is_zero()) r += slots[k].scaled(values[k]);
    return r;
  }
};

/// One unknown per lexicographic slot of the exterior square.
inline AnsatzR general_ansatz(const LieAlgebra& g) {
  AnsatzR a;
  for (const auto& s : wedge_slots<2>(g.dim())) {
    a.unknowns.push_back("r[" + slot_label(g, s) + "]");
    a.slots.push_back(Bivector::basis(g.dim(), {s[0], s[1]}));
  }
  return a;
}

inline const std::vector<Var>& ansatz_2plus1_vars() {
  static const std::vector<Var> v = {Var::a1, Var::a2, Var::a3, Var::a4, Var::a5, Var::a6, Var::b1, Var::b2,
                                     Var::b3, Var::b4, Var::b5, Var::b6, Var::c1, Var::c2, Var::c3};
  return v;
}

/// The 15-parameter 2+1 element in the order a1..a6, b1..b6, c1..c3.
inline AnsatzR ansatz_2plus1(const LieAlgebra& g) {
  static const std::vector<std::pair<std::string, std::string>> terms = {
      {"J3", "P1"}, {"J3", "K1"}, {"P0", "P1"}, {"P0", "K1"}, {"P1", "K1"}, {"P1", "K2"}, {"J3", "P2"}, {"J3", "K2"},
      {"P0", "P2"}, {"P0", "K2"}, {"P2", "K2"}, {"P2", "K1"}, {"J3", "P0"}, {"K1", "K2"}, {"P1", "P2"}};
  AnsatzR a;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    a.unknowns.emplace_back(var_name(ansatz_2plus1_vars()[k]));
    a.slots.push_back(w2(g, terms[k].first, terms[k].second));
  }
  return a;
}

inline bool is_2plus1(const LieAlgebra& g) { return g.labels() == kinematical_labels_2plus1(); }

inline AnsatzR default_ansatz(const LieAlgebra& g) { return is_2plus1(g) ? ansatz_2plus1(g) : general_ansatz(g); }

/// The ansatz with every unknown replaced by its formal variable (2+1 only).
inline Bivector symbolic_2plus1(const LieAlgebra& g) {
  const AnsatzR a = ansatz_2plus1(g);
  std::vector<Scalar> v;
  for (auto x : ansatz_2plus1_vars()) v.push_back(Scalar::var(x));
  return a.assemble(v);
}

namespace detail {

/// Rows: the requested output components of ad_X(r) for X in h.
template <typename Keep>
LinearSystem cocommutator_system(const LieAlgebra& g, const Subalgebra& h, const AnsatzR& a, Keep keep) {
  LinearSystem sys{a.unknowns, {}};
  const auto outs = wedge_slots<2>(g.dim());
  for (auto x : h.indices) {
    std::vector<Bivector> img;
    for (const auto& s : a.slots) img.push_back(ad(g, x, s));
    for (const auto& o : outs) {
      if (!keep(o)) continue;
      std::vector<Scalar> row(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) row[j] = img[j].coeff(o);
      sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

}  // namespace detail

/// delta(h) = 0: every component of ad_X(r), X in h.
inline LinearSystem system_trivial_lorentz(const LieAlgebra& g, const Subalgebra& h, const AnsatzR& a) {
  return detail::cocommutator_system(g, h, a, [](const auto&) { return true; });
}
inline LinearSystem system_trivial_lorentz(const LieAlgebra& g, const Subalgebra& h) {
  return system_trivial_lorentz(g, h, default_ansatz(g));
}

/// delta(h) in h^h: components of ad_X(r) outside h^h, X in h.
inline LinearSystem system_sub_bialgebra(const LieAlgebra& g, const Subalgebra& h, const AnsatzR& a) {
  return detail::cocommutator_system(g, h, a, [&h](const auto& o) { return !(h.contains(o[0]) && h.contains(o[1])); });
}
inline LinearSystem system_sub_bialgebra(const LieAlgebra& g, const Subalgebra& h) {
  return system_sub_bialgebra(g, h, default_ansatz(g));
}

inline std::vector<Bivector> kernel_rmatrices(const AnsatzR& a, const SolutionSpace& s) {
  std::vector<Bivector> out;
  for (const auto& v : s.basis) out.push_back(a.assemble(v));
  return out;
}

/// Unknowns that vanish on the whole solution space.
inline std::vector<std::string> forced_zero(const AnsatzR& a, const SolutionSpace& s) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    bool zero = true;
    for (const auto& v : s.basis) zero = zero && v[j].is_zero();
    if (zero) out.push_back(a.unknowns[j]);
  }
  return out;
}

/// Residual conditions vanish when v = 0, and one of them is a pure power of v,
/// so vanishing forces v = 0.
inline bool vanishes_iff_zero(const McybeResidual& res, Var v) {
  bool forcing = false;
  for (const auto& c : distinct_conditions(res)) {
    if (!c.substitute(v, Rational(0)).is_zero()) return false;
    if (c.terms().size() == 1) {
      const Monomial& m = c.leading_term().first;
      Monomial only{};
      only[v] = m[v];
      forcing = forcing || (m == only && m[v] > 0);
    }
  }
  return forcing;
}

struct LorentzRow {
  std::string name;
  Bivector r;
  bool triangular;
  bool mcybe_in_lorentz;
  bool schouten_invariant;
};

/// Every family of the Lorentz table with symbolic parameters, checked inside so(3,1).
inline std::vector<LorentzRow> verify_lorentz_table() {
  const LieAlgebra so31 = build_lorentz();
  std::vector<LorentzRow> rows;
  auto add = [&](std::string name, Bivector r) {
    const McybeResidual res = mcybe_residual(so31, r);
    rows.push_back({std::move(name), r, res.triangular(), res.vanishes(), is_invariant(so31, res.schouten)});
  };
  add("A", r_lorentz_A(so31));
  add("B", r_lorentz_B(so31));
  add("C", r_lorentz_C(so31));
  add("D", r_lorentz_D(so31));
  return rows;
}

struct Prop2Row {
  std::string name;
  Bivector r;
  bool in_hh;
  bool triangular;
  bool sub_bialgebra;
  bool nontrivial_on_h;
};

inline std::vector<Prop2Row> verify_prop2() {
  const LieAlgebra g = build_g_lambda();
  const Subalgebra h = lorentz_subalgebra(g);
  std::vector<Prop2Row> rows;
  auto add = [&](std::string name, Bivector r) {
    bool hh = true;
    for (const auto& [k, v] : r.coeffs()) hh = hh && h.contains(k[0]) && h.contains(k[1]);
    const Cocommutator d = cocommutator(g, r);
    bool nontrivial = false;
    for (auto i : h.indices) nontrivial = nontrivial || !d.images[i].is_zero();
    rows.push_back({std::move(name), r, hh, schouten(g, r).is_zero(), is_sub_bialgebra(d, h), nontrivial});
  };
  add("I", r_type_I(g));
  add("II", r_type_II(g));
  add("III", r_type_III(g));
  return rows;
}

/// The 2+1 sub-bialgebra family: a2 J3^K1 + b2 J3^K2 + c2 K1^K2 + c1 (J3^P0 - P1^K2 + P2^K1).
inline Bivector family_2plus1(const LieAlgebra& g, const Scalar& a2 = Scalar::var(Var::a2),
                              const Scalar& b2 = Scalar::var(Var::b2), const Scalar& c2 = Scalar::var(Var::c2),
                              const Scalar& c1 = Scalar::var(Var::c1)) {
  return w2(g, "J3", "K1").scaled(a2) + w2(g, "J3", "K2").scaled(b2) + w2(g, "K1", "K2").scaled(c2) +
         (w2(g, "J3", "P0") - w2(g, "P1", "K2") + w2(g, "P2", "K1")).scaled(c1);
}

/// c2^2 - a2^2 - b2^2 - 4 Lambda c1^2.
inline Scalar constraint_2plus1() {
  const Scalar a2 = Scalar::var(Var::a2), b2 = Scalar::var(Var::b2), c2 = Scalar::var(Var::c2),
               c1 = Scalar::var(Var::c1);
  return c2 * c2 - a2 * a2 - b2 * b2 - Scalar(4L) * Lam() * c1 * c1;
}

}  // namespace nclorentz
