#pragma once

// Verification suites. Every check carries a stable id, a short quotation
// anchoring it in the source material, a status and a residual. Exact checks
// report residual 0 when the identity holds and the number of offending
// entries otherwise; numeric checks report the largest absolute deviation.

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nclorentz/classify.hpp"
#include "nclorentz/contract.hpp"
#include "nclorentz/invariants.hpp"
#include "nclorentz/phs_reference.hpp"
#include "nclorentz/quantize.hpp"
#include "nclorentz/reference_tables.hpp"

namespace nclorentz {

enum class Status { pass, fail, divergent };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::divergent:
      return "divergent";
  }
  return "?";
}

struct CheckRecord {
  std::string id;
  std::string anchor;
  Status status = Status::fail;
  double residual = 0.0;
  double seconds = 0.0;
  /// Human-readable outcome for text reports, e.g. a dimension.
  std::string value;
};

struct RunConfig {
  std::vector<double> lambdas{0.0, 0.4, -0.4};
  std::vector<Rational> exact_lambdas{Rational(0), Rational(1), Rational(-1)};
  int samples = 100;
  unsigned seed = 7;
  double tolerance = 1e-9;
  double z = 0.7;
  double zp = -1.3;
  std::optional<PhsType> type;
  bool timing = false;
};

struct Outcome {
  bool ok = false;
  double residual = 0.0;
  std::string value;
};

inline Outcome exact(bool ok, std::string value = "") { return {ok, ok ? 0.0 : 1.0, std::move(value)}; }
inline Outcome exact_count(std::size_t bad, std::string value = "") {
  return {bad == 0, static_cast<double>(bad), std::move(value)};
}
inline Outcome numeric(double residual, double tol) { return {residual < tol, residual, ""}; }

class CheckList {
 public:
  explicit CheckList(bool timing) : timing_(timing) {}

  void add(std::string id, std::string anchor, const std::function<Outcome()>& fn) {
    CheckRecord rec{std::move(id), std::move(anchor), Status::fail, 0.0, 0.0, ""};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Outcome o = fn();
      rec.status = o.ok ? Status::pass : Status::fail;
      rec.residual = o.residual;
      rec.value = o.value;
    } catch (const DivergentLimit& e) {
      rec.status = Status::divergent;
      rec.residual = 1.0;
      rec.value = e.what();
    } catch (const std::exception& e) {
      rec.residual = 1.0;
      rec.value = e.what();
    }
    if (timing_) rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    records_.push_back(std::move(rec));
  }

  std::vector<CheckRecord> take() {
    std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return std::move(records_);
  }

 private:
  bool timing_;
  std::vector<CheckRecord> records_;
};

namespace suites {

inline const char* type_name(PhsType t) { return t == PhsType::I ? "I" : t == PhsType::II ? "II" : "III"; }

inline std::vector<PhsType> selected_types(const RunConfig& cfg) {
  if (cfg.type) return {*cfg.type};
  return {PhsType::I, PhsType::II, PhsType::III};
}

inline void classify(const RunConfig& cfg, CheckList& out) {
  const LieAlgebra g = build_g_lambda();
  const Subalgebra h = lorentz_subalgebra(g);

  const LinearSystem trivial = system_trivial_lorentz(g, h);
  out.add("prop1.system_size", "their unique solution is r = 0", [&] {
    return exact(trivial.row_count() == 270 && trivial.col_count() == 45,
                 std::to_string(trivial.row_count()) + "x" + std::to_string(trivial.col_count()));
  });
  std::optional<SolveReport> prop1;
  out.add("prop1.dimension", "their unique solution is r = 0", [&] {
    prop1 = solve_with_specials(trivial, Var::Lambda, cfg.exact_lambdas);
    return exact(prop1->generic.dimension == 0, std::to_string(prop1->generic.dimension));
  });
  out.add("prop1.special_lambda", "their unique solution is r = 0", [&] {
    if (!prop1) return exact(false, "generic solve failed");
    std::size_t bad = 0;
    std::string dims;
    for (const auto& s : prop1->specials) {
      bad += s.dimension != 0;
      dims += (dims.empty() ? "" : ",") + std::to_string(s.dimension);
    }
    return exact_count(bad, dims);
  });

  const LinearSystem sub = system_sub_bialgebra(g, h);
  std::optional<SolutionSpace> lemma;
  out.add("lemma1.dimension", "r in h^h", [&] {
    lemma = solve(sub);
    return exact(lemma->dimension == 15, std::to_string(lemma->dimension));
  });
  out.add("lemma1.forced_zero", "r in h^h", [&] {
    if (!lemma) return exact(false);
    const auto zero = forced_zero(general_ansatz(g), *lemma);
    std::size_t bad = zero.size() == 30 ? 0 : 1;
    for (const auto& u : zero) bad += u.find('P') == std::string::npos;
    return exact_count(bad, std::to_string(zero.size()));
  });
  std::optional<std::vector<Prop2Row>> prop2;
  for (std::size_t i = 0; i < 3; ++i)
    out.add(std::string("prop2.type_") + type_name(static_cast<PhsType>(i)),
            "These three r-matrices are solutions of the CYBE", [&, i] {
              if (!prop2) prop2 = verify_prop2();
              const auto& row = prop2->at(i);
              return exact(row.in_hh && row.triangular && row.sub_bialgebra && row.nontrivial_on_h, row.name);
            });

  std::optional<std::vector<LorentzRow>> lorentz;
  for (std::size_t i = 0; i < 4; ++i)
    out.add(std::string("lorentz.type_") + "ABCD"[i], "Classification of solutions of the mCYBE", [&, i] {
      if (!lorentz) lorentz = verify_lorentz_table();
      const auto& row = lorentz->at(i);
      const bool expect_triangular = row.name == "B" || row.name == "D";
      return exact(row.mcybe_in_lorentz && row.schouten_invariant && row.triangular == expect_triangular,
                   row.triangular ? "triangular" : "quasitriangular");
    });
  out.add("lorentz.C_embedded", "if and only if gamma = 0", [&] {
    const McybeResidual res = mcybe_residual(g, r_lorentz_C(g));
    const bool at_zero = mcybe_residual(g, r_lorentz_C(g, Scalar(), Scalar::var(Var::chip))).vanishes();
    return exact(!res.vanishes() && vanishes_iff_zero(res, Var::gamma) && at_zero);
  });

  const LieAlgebra g3 = build_g_2plus1();
  const Subalgebra h3 = make_subalgebra(g3, "h", {"K1", "K2", "J3"});
  out.add("twoplusone.trivial", "the single non-trivial solution", [&] {
    const SolutionSpace sol = solve(system_trivial_lorentz(g3, h3));
    if (sol.dimension != 1) return exact(false, std::to_string(sol.dimension));
    const Bivector r = kernel_rmatrices(ansatz_2plus1(g3), sol)[0];
    const Bivector e = w2(g3, "J3", "P0") - w2(g3, "P1", "K2") + w2(g3, "P2", "K1");
    const auto& [k0, v0] = *e.coeffs().begin();
    return exact(r == e.scaled(r.coeff(k0).exact_div(v0)), "1");
  });
  out.add("twoplusone.trivial_mcybe", "Lambda c1^2 = 0", [&] {
    const Bivector e = (w2(g3, "J3", "P0") - w2(g3, "P1", "K2") + w2(g3, "P2", "K1")).scaled(Scalar::var(Var::c1));
    const auto cond = distinct_conditions(mcybe_residual(g3, e));
    return exact(cond.size() == 1 && cond[0] == Lam() * Scalar::var(Var::c1, 2),
                 cond.empty() ? "" : cond[0].to_string());
  });
  out.add("twoplusone.constraint", "c2^2 - a2^2 - b2^2 - 4 Lambda c1^2 = 0", [&] {
    const auto cond = distinct_conditions(mcybe_residual(g3, family_2plus1(g3)));
    return exact(cond.size() == 1 && cond[0].normalized() == constraint_2plus1().normalized(),
                 cond.empty() ? "" : cond[0].to_string());
  });
  out.add("twoplusone.de_sitter_branches", "Lambda = +1", [&] {
    const std::map<Var, Rational> dS{{Var::Lambda, Rational(1)}};
    const Scalar c1 = Scalar::var(Var::c1), c2 = Scalar::var(Var::c2);
    const LieAlgebra g3ds = g3.map_coeffs([&](const Scalar& v) { return v.substitute(dS); }, "so31");
    const Bivector b1 = family_2plus1(g3, -c2, Scalar(), c2, Scalar());
    const Bivector b2 = family_2plus1(g3, Scalar(), Scalar(), Scalar(2L) * c1, c1);
    return exact(b1 == r_type_III(g3, c2) && schouten(g3, b1).is_zero() && mcybe_residual(g3ds, b2).vanishes() &&
                 !mcybe_residual(g3, b2).vanishes());
  });
}

inline void bialgebra(const RunConfig&, CheckList& out) {
  const LieAlgebra g = build_g_lambda();
  out.add("delta.null_plane_zp.terms", "cocommutator delta_z'", [&] {
    const Cocommutator d = cocommutator(g, r_type_I(g, Scalar(), zps()));
    const auto expected = null_plane_delta_zp(g);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < g.dim(); ++i) bad += !(d.images[i] == expected[i]);
    return exact_count(bad);
  });
  using L = std::vector<std::string>;
  const auto cand = default_candidates(g);
  const auto primitives = [&](const std::string& id, const std::string& anchor, const RMatrix& r, const L& want) {
    out.add("delta.primitives." + id, anchor, [&, r, want] {
      const auto got = primitive_generators(cocommutator(g, r), cand);
      std::string v;
      for (const auto& s : got) v += (v.empty() ? "" : " ") + s;
      return exact(got == want, v);
    });
  };
  primitives("I_zp", "J1, P-, (K2+J3) and (K3-J2) are primitive", r_type_I(g, Scalar(), zps()),
             {"J1", "P-", "K2+J3", "K3-J2"});
  primitives("I_z", "only (K2+J3) and (K3-J2) have a vanishing cocommutator", r_type_I(g, zs(), Scalar()),
             {"K2+J3", "K3-J2"});
  primitives("I", "primitive generators (K2+J3) and (K3-J2)", r_type_I(g), {"K2+J3", "K3-J2"});
  primitives("II", "K1 and J1 are primitive", r_type_II(g), {"K1", "J1"});
  primitives("III", "P3 and K2+J3 are primitive", r_type_III(g), {"P3", "K2+J3"});
  for (auto t : {PhsType::I, PhsType::II, PhsType::III}) {
    const RMatrix r = relativistic_rmatrix(g, t);
    out.add(std::string("delta.first_order.type_") + type_name(t), "for any value of Lambda",
            [&, r] { return exact(first_order_vanishing(g, cocommutator(g, r))); });
    out.add(std::string("delta.bialgebra_axioms.type_") + type_name(t), "Lie bialgebra", [&, r] {
      const Cocommutator d = cocommutator(g, r);
      return exact_count(cocycle_violations(g, d).size() + cojacobi_violations(d).size());
    });
  }
}

struct PhsSweep {
  double local = 0, ambient = 0, s4 = 0, casimir = 0, beltrami = 0;
  /// Per-entry maxima over the sweep.
  Mat local_entries = Mat::Zero(4, 4);
  Mat ambient_entries = Mat::Zero(5, 5);
};

inline PhsSweep phs_sweep(Kinematics k, PhsType t, const RunConfig& cfg) {
  PhsSweep sw;
  const auto model = geometry_model(k);
  const auto table = ambient_reference(k, t);
  const Poly s0 = table.gen("s0"), s1 = table.gen("s1"), s2 = table.gen("s2"), s3 = table.gen("s3");
  const Poly cas = s0 * s0 - s1 * s1 - s2 * s2 - s3 * s3;
  std::mt19937 rng(cfg.seed + 31u * static_cast<unsigned>(t) + 97u * static_cast<unsigned>(k));
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (double l : cfg.lambdas) {
    const PhsParameters q{l, cfg.z, cfg.zp};
    const auto rho = numeric_rep(model.rho, l);
    const Mat r = numeric_r(model_rmatrix(k, t), q.bindings());
    for (int n = 0; n < cfg.samples; ++n) {
      const std::array<double, 4> x{u(rng), u(rng), u(rng), u(rng)};
      const Eigen::Matrix4d pi = phs_brackets(rho, r, x);
      const Mat dl = (pi - local_reference(k, t, x, q)).cwiseAbs();
      sw.local_entries = sw.local_entries.cwiseMax(dl);
      const auto s = ambient_point(k, x, l);
      const auto amb = push_forward(k, x, l, pi);
      const Mat da = (amb - evaluate_table(table, s, q.bindings())).cwiseAbs();
      sw.ambient_entries = sw.ambient_entries.cwiseMax(da);
      sw.s4 = std::max(sw.s4, amb.row(0).cwiseAbs().maxCoeff());
      if (k == Kinematics::relativistic) sw.casimir = std::max(sw.casimir, casimir_residual(cas, s, amb, q.bindings()));
      const std::array<double, 5> qs{1.0, s[1] / s[0], s[2] / s[0], s[3] / s[0], s[4] / s[0]};
      const Eigen::Matrix4d bref = evaluate_table(table, qs, q.bindings()).bottomRightCorner<4, 4>();
      sw.beltrami = std::max(sw.beltrami, (beltrami_brackets(s, amb) - bref).cwiseAbs().maxCoeff());
    }
  }
  sw.local = sw.local_entries.maxCoeff();
  sw.ambient = sw.ambient_entries.maxCoeff();
  return sw;
}

inline std::vector<std::pair<std::string, PolyPoissonAlgebra>> shipped_poisson_algebras() {
  namespace pt = poisson_tables;
  return {{"relativistic_I", pt::ambient(pt::type_I())},     {"relativistic_II", pt::ambient(pt::type_II())},
          {"relativistic_III", pt::ambient(pt::type_III())}, {"newtonian_I", pt::ambient(pt::newtonian_I())},
          {"newtonian_II", pt::ambient(pt::newtonian_II())}, {"carrollian_I", pt::ambient(pt::carrollian_I())},
          {"carrollian_II", pt::ambient(pt::carrollian_II())}, {"twoplusone_III", pt::type_III_2plus1()}};
}

inline void phs(const RunConfig& cfg, CheckList& out) {
  out.add("phs.sign_calibration", "{x0, x1} = z (x0 + x1) x2", [&] {
    const auto rho = numeric_rep(rho_g_lambda(), 0.0);
    const Mat r = numeric_r(r_type_III(build_g_lambda()), {{Var::z, 1.0}});
    return numeric(std::abs(phs_brackets(rho, r, {1, 2, 3, 4})(0, 1) - 9.0), cfg.tolerance);
  });
  for (auto t : selected_types(cfg)) {
    const std::string tn = std::string("type_") + type_name(t);
    PhsSweep sw;
    out.add("phs.local." + tn, "Poisson homogeneous spaces in geodesic parallel coordinates", [&] {
      sw = phs_sweep(Kinematics::relativistic, t, cfg);
      return numeric(sw.local, cfg.tolerance);
    });
    out.add("phs.ambient." + tn, "formally identical with the (A)dS expressions",
            [&] { return numeric(sw.ambient, cfg.tolerance); });
    out.add("phs.s4_central." + tn, "s4 does not appear in the Poisson brackets",
            [&] { return numeric(sw.s4, cfg.tolerance); });
    out.add("phs.casimir." + tn, "quadratic Casimir", [&] { return numeric(sw.casimir, cfg.tolerance); });
    out.add("phs.beltrami." + tn, "Beltrami coordinates", [&] { return numeric(sw.beltrami, cfg.tolerance); });
  }

  for (const auto& [name, alg] : shipped_poisson_algebras()) {
    const auto& a = alg;
    out.add("poisson.jacobi." + name, "associativity is ensured by the Jacobi identity",
            [&] { return exact_count(jacobi_violations(a).size()); });
  }
  namespace pt = poisson_tables;
  for (const auto& [name, q] : std::vector<std::pair<std::string, PolyPoissonAlgebra>>{
           {"relativistic_I", pt::type_I()}, {"relativistic_II", pt::type_II()}, {"relativistic_III", pt::type_III()}}) {
    const auto a = pt::ambient(q);
    out.add("poisson.casimir." + name, "for any z and z'", [a] {
      return exact(casimir_check(a, pt::lorentz_casimir(a, "s")) && casimir_check(a, a.gen("s4")));
    });
  }
  out.add("poisson.casimir.twoplusone_III", "the (2+1)D version of", [] {
    const auto a = pt::type_III_2plus1();
    return exact(casimir_check(a, pt::lorentz_casimir(a, "x")));
  });
  out.add("poisson.casimir.newtonian", "reduces to C = (s0)^2", [] {
    const auto n1 = pt::newtonian_I(), n2 = pt::newtonian_II();
    const Poly e2 = n2.gen("s2") * n2.gen("s2") + n2.gen("s3") * n2.gen("s3");
    return exact(casimir_check(n1, n1.gen("s0")) && casimir_check(n2, n2.gen("s0")) && casimir_check(n2, e2));
  });
  out.add("poisson.casimir.carrollian", "s1 becomes a central generator", [] {
    const auto c2 = pt::carrollian_II();
    const Poly e2 = c2.gen("s2") * c2.gen("s2") + c2.gen("s3") * c2.gen("s3");
    return exact(casimir_check(c2, c2.gen("s1")) && casimir_check(c2, e2));
  });
}

struct QuantumPairing {
  std::string id;
  NCAlgebra quantum;
  PolyPoissonAlgebra poisson;
};

inline std::vector<QuantumPairing> quantum_pairings() {
  namespace nq = nc_algebras;
  namespace pt = poisson_tables;
  return {
      {"null_plane_zp", nq::type_I_zprime(), pt::null_plane(pt::type_I("x", Scalar(), zps()), "x", {"2", "3"})},
      {"null_plane_z", nq::type_I_z(), pt::null_plane(pt::type_I("x", zs(), Scalar()), "x", {"2", "3"})},
      {"type_I_combined", nq::type_I(), pt::null_plane(pt::type_I("x"), "x", {"2", "3"})},
      {"type_II", nq::type_II(), pt::type_II("x")},
      {"type_III_2plus1", nq::type_III(), pt::null_plane(pt::type_III_2plus1("x"), "x", {"2"})},
      {"newtonian_I", nq::newtonian_I(), pt::newtonian_I()},
      {"newtonian_II", nq::newtonian_II(), pt::newtonian_II()},
      {"carrollian_I", nq::carrollian_I(), pt::carrollian_I()},
      {"carrollian_II", nq::carrollian_II(), pt::carrollian_II()},
  };
}

inline void quantize(const RunConfig&, CheckList& out) {
  namespace nq = nc_algebras;
  for (const auto& p : quantum_pairings()) {
    out.add("quantize.confluence." + p.id, "associativity is ensured by the Jacobi identity", [&] {
      const auto rep = confluence_check(p.quantum);
      return exact_count(rep.failures.size(), rep.confluent() ? "" : rep.failures.front().triple);
    });
    out.add("quantize.semiclassical." + p.id, "quantization of a coisotropic PHS", [&] {
      const auto rep = semiclassical_check(p.quantum, p.poisson);
      std::size_t bad = 0;
      std::string first;
      for (const auto& e : rep.entries)
        if (!e.matches()) {
          if (first.empty()) first = e.pair;
          ++bad;
        }
      return exact_count(bad, first);
    });
  }
  out.add("quantize.confluence.linear_reference", "linear-algebraic deformation",
          [] { return exact(confluence_check(nq::null_plane_linear_reference()).confluent()); });
  out.add("quantize.semiclassical_first_order.type_I_combined", "quantization of a coisotropic PHS", [] {
    const auto rep = semiclassical_check(nq::type_I(), poisson_tables::null_plane(poisson_tables::type_I("x"), "x", {"2", "3"}));
    return exact(rep.ok_first_order());
  });
  out.add("quantize.ordering.type_I_combined", "considering altogether", [] {
    const auto literal = confluence_check(nq::type_I("x", zs(), zps(), false));
    return exact(literal.failures.size() == 1 && literal.failures[0].triple == "x2 x3 x-" &&
                     confluence_check(nq::type_I()).confluent(),
                 literal.failures.empty() ? "" : literal.failures[0].triple);
  });
  out.add("quantize.casimir.null_plane", "quantum counterpart of the Casimir", [] {
    bool ok = true;
    for (const auto& a : {nq::type_I_zprime(), nq::type_I_z(), nq::type_I()}) ok = ok && central_check(a, nq::null_plane_casimir(a));
    return exact(ok);
  });
  out.add("quantize.casimir.type_III_2plus1", "the (2+1)D version of", [] {
    const auto a = nq::type_III();
    return exact(central_check(a, nq::null_plane_casimir(a)));
  });
  out.add("quantize.negative_control", "one corrupted coefficient", [] {
    auto a = nq::type_I();
    a.relation("x-", "x+", a.word({"x+", "x2"}, Scalar(4L) * zs()));
    const auto rep = confluence_check(a);
    return exact(!rep.confluent() && !rep.failures.front().triple.empty(),
                 rep.confluent() ? "" : rep.failures.front().triple);
  });
  out.add("quantize.central.newtonian", "quantum time coordinate s0 becomes a central element", [] {
    const auto n1 = nq::newtonian_I(), n2 = nq::newtonian_II();
    return exact(central_check(n1, n1.gen("s0")) && central_check(n2, n2.gen("s0")) &&
                 central_check(n2, n2.word({"s2", "s2"}) + n2.word({"s3", "s3"})));
  });
  out.add("quantize.central.carrollian", "s1 becomes a central generator", [] {
    const auto c2 = nq::carrollian_II();
    return exact(central_check(c2, c2.gen("s1")) && central_check(c2, c2.word({"s2", "s2"}) + c2.word({"s3", "s3"})));
  });
}

inline std::string cell_id(const ContractionCell& c) {
  return to_string(c.kind) + "_" + type_name(c.type);
}

inline void contract(const RunConfig& cfg, CheckList& out) {
  const LieAlgebra g = build_g_lambda();
  out.add("contract.algebra.newtonian", "family of non-relativistic or Newtonian Lie algebras",
          [&] { return exact(contract_algebra(g, newtonian_map(PhsType::I), "newtonian") == build_newtonian()); });
  out.add("contract.algebra.carrollian", "family of three Carrollian algebras",
          [&] { return exact(contract_algebra(g, carrollian_map(PhsType::I), "carrollian") == build_carrollian()); });
  for (const auto& cell : contraction_cells()) {
    const std::string id = cell_id(cell);
    const ScalingMap m = scaling_for(cell.kind, cell.type);
    const RMatrix r = relativistic_rmatrix(g, cell.type);
    out.add("contract.rmatrix." + id, "fundamental and coboundary LBC", [&, m, r] {
      return exact(contract_rmatrix(r, m) == expected_contracted_rmatrix(g, cell.type));
    });
    out.add("contract.lbc." + id, "fundamental and coboundary LBC",
            [&, m, r] { return exact(lbc_check(g, r, m).consistent()); });
    out.add("contract.table." + id, "with quantum Euclidean subgroups",
            [cell] { return exact(contracted_ambient_table(cell) == ambient_reference(cell.kind, cell.type)); });
    out.add("contract.route." + id, "contraction map for geodesic parallel and ambient coordinates", [&, cell] {
      double worst = 0.0;
      for (double l : cfg.lambdas)
        worst = std::max(worst, route_commutation_residual(cell, l, {l, cfg.z, cfg.zp}, cfg.samples, cfg.seed));
      return numeric(worst, cfg.tolerance);
    });
    out.add("contract.local." + id, "with quantum Euclidean subgroups",
            [&, cell] { return numeric(phs_sweep(cell.kind, cell.type, cfg).local, cfg.tolerance); });
  }
  using L = std::vector<std::string>;
  const auto prim = [&](const std::string& id, Kinematics k, PhsType t, const L& want, const std::string& anchor) {
    out.add("contract.primitives." + id, anchor, [&, k, t, want] {
      const auto res = lbc_check(g, relativistic_rmatrix(g, t), scaling_for(k, t));
      return exact(basis_primitives(res.algebra, res.from_r) == want);
    });
    out.add("contract.euclidean." + id, "non-trivial Euclidean sub-Lie bialgebra", [&, k, t] {
      const auto res = lbc_check(g, relativistic_rmatrix(g, t), scaling_for(k, t));
      return exact(euclidean_sub_bialgebra(res.algebra, res.from_r));
    });
  };
  prim("newtonian_I", Kinematics::newtonian, PhsType::I, {"P1", "P2", "P3", "K1", "K2", "K3"},
       "the primitive generators are P and K");
  prim("newtonian_II", Kinematics::newtonian, PhsType::II, {"P1", "K1", "J1"}, "these are {K1, J1, P1}");
  prim("carrollian_I", Kinematics::carrollian, PhsType::I, {"P0", "K1", "K2", "K3"}, "the primitive generators are P0 and K");
  prim("carrollian_II", Kinematics::carrollian, PhsType::II, {"P0", "K1", "J1"}, "these are {K1, J1, P0}");
  out.add("contract.wrong_power", "fundamental and coboundary LBC", [&] {
    auto m = newtonian_map(PhsType::I);
    m.parameter = {{Var::z, 1}, {Var::zp, 1}};
    try {
      return exact(!lbc_check(g, r_type_I(g), m).consistent(), "inconsistent");
    } catch (const DivergentLimit& e) {
      return exact(true, e.what());
    }
  });
  for (const auto& s : contracted_nc_spaces()) {
    std::string id = s.name;
    std::replace(id.begin(), id.end(), ' ', '_');
    out.add("contract.quantum." + id, "Noncommutative Newtonian and Carrollian spaces", [s] {
      return exact(confluence_check(s.quantum).confluent() && semiclassical_check(s.quantum, s.poisson).ok() &&
                   jacobi_violations(s.poisson).empty());
    });
  }
  const Kinematics kinds[] = {Kinematics::newtonian, Kinematics::newtonian, Kinematics::carrollian};
  const PhsType types[] = {PhsType::I, PhsType::II, PhsType::II};
  const auto flat = flat_contracted_spaces();
  for (std::size_t i = 0; i < flat.size(); ++i) {
    std::string id = flat[i].name;
    std::replace(id.begin(), id.end(), ' ', '_');
    out.add("contract.flat." + id, "such that s^mu = x^mu", [&, i] {
      const auto& s = flat[i];
      if (!confluence_check(s.quantum).confluent() || !semiclassical_check(s.quantum, s.poisson).ok())
        return exact(false);
      std::mt19937 rng(cfg.seed);
      std::uniform_real_distribution<double> u(-0.8, 0.8);
      const PhsParameters q{0.0, cfg.z, cfg.zp};
      double worst = 0.0;
      for (int n = 0; n < cfg.samples; ++n) {
        const std::array<double, 4> x{u(rng), u(rng), u(rng), u(rng)};
        const auto local = local_reference(kinds[i], types[i], x, q);
        const std::vector<double> pt(x.begin(), x.end());
        for (std::size_t a = 0; a < 4; ++a)
          for (std::size_t b = a + 1; b < 4; ++b)
            worst = std::max(worst, std::abs(local(a, b) - s.poisson.at(a, b).evaluate(pt, q.bindings())));
      }
      return numeric(worst, cfg.tolerance);
    });
  }
}


inline void table_lorentz(const RunConfig&, CheckList& out) {
  for (const auto& row : verify_lorentz_table()) {
    const bool expect_triangular = row.name == "B" || row.name == "D";
    out.add("lorentz." + row.name, "Classification of solutions of the mCYBE", [&] {
      return exact(row.mcybe_in_lorentz && row.schouten_invariant && row.triangular == expect_triangular,
                   std::string(row.triangular ? "triangular" : "quasitriangular") + " r = " +
                       row.r.to_string(build_lorentz().labels()));
    });
  }
}

inline void table_phs(const RunConfig& cfg, CheckList& out) {
  for (auto t : selected_types(cfg)) {
    const std::string tn = std::string("type_") + type_name(t);
    PhsSweep sw;
    bool swept = false;
    const auto sweep = [&] {
      if (!swept) sw = phs_sweep(Kinematics::relativistic, t, cfg);
      swept = true;
    };
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        out.add("phs." + tn + ".local.x" + std::to_string(a) + "x" + std::to_string(b),
                "Poisson homogeneous spaces in geodesic parallel coordinates", [&, a, b] {
                  sweep();
                  return numeric(sw.local_entries(a, b), cfg.tolerance);
                });
    const auto labels = ambient_reference(Kinematics::relativistic, t).generators();
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b)
        out.add("phs." + tn + ".ambient." + labels[a] + labels[b], "formally identical with the (A)dS expressions",
                [&, a, b] {
                  sweep();
                  return numeric(sw.ambient_entries(a, b), cfg.tolerance);
                });
  }
}

inline void table_contracted(const RunConfig&, CheckList& out) {
  for (const auto& cell : contraction_cells()) {
    std::optional<PolyPoissonAlgebra> got;
    const auto want = ambient_reference(cell.kind, cell.type);
    const auto& labels = want.generators();
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a + 1; b < labels.size(); ++b)
        out.add("contracted." + cell_id(cell) + "." + labels[a] + labels[b], "with quantum Euclidean subgroups",
                [&, a, b] {
                  if (!got) got = contracted_ambient_table(cell);
                  return exact(got->at(a, b) == want.at(a, b), got->at(a, b).to_string(labels));
                });
  }
}

}  // namespace suites

inline const std::vector<std::string>& table_names() {
  static const std::vector<std::string> n{"lorentz", "phs", "contracted"};
  return n;
}

inline std::vector<CheckRecord> run_table(const std::string& which, const RunConfig& cfg) {
  CheckList out(cfg.timing);
  if (which == "lorentz")
    suites::table_lorentz(cfg, out);
  else if (which == "phs")
    suites::table_phs(cfg, out);
  else if (which == "contracted")
    suites::table_contracted(cfg, out);
  else
    throw ConfigError("unknown table " + which);
  return out.take();
}

struct ClassificationReport {
  std::string dim;
  std::string condition;
  std::size_t rows = 0;
  std::size_t unknowns = 0;
  std::size_t dimension = 0;
  std::vector<std::string> basis;
  /// Distinct mCYBE conditions on the general kernel element (2+1 only).
  std::vector<std::string> constraints;
};

inline ClassificationReport classification(const std::string& dim, const std::string& condition) {
  if (dim != "3+1" && dim != "2+1") throw ConfigError("--dim must be 3+1 or 2+1");
  if (condition != "trivial" && condition != "subbialgebra")
    throw ConfigError("--condition must be trivial or subbialgebra");
  const bool small = dim == "2+1";
  const LieAlgebra g = small ? build_g_2plus1() : build_g_lambda();
  const Subalgebra h = small ? make_subalgebra(g, "h", {"K1", "K2", "J3"}) : lorentz_subalgebra(g);
  const AnsatzR a = default_ansatz(g);
  const LinearSystem sys = condition == "trivial" ? system_trivial_lorentz(g, h, a) : system_sub_bialgebra(g, h, a);
  const SolutionSpace sol = solve(sys);
  ClassificationReport rep{dim, condition, sys.row_count(), sys.col_count(), sol.dimension, {}, {}};
  const auto kernel = kernel_rmatrices(a, sol);
  for (const auto& r : kernel) rep.basis.push_back(r.to_string(g.labels()));
  if (small && !kernel.empty()) {
    Bivector general(g.dim());
    for (std::size_t k = 0; k < kernel.size(); ++k)
      general += kernel[k].scaled(Scalar::var(ansatz_2plus1_vars()[sol.free_columns[k]]));
    for (const auto& c : distinct_conditions(mcybe_residual(g, general)))
      rep.constraints.push_back((-c == constraint_2plus1() ? -c : c).to_string());
  }
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"bialgebra", "classify", "phs", "quantize", "contract"};
  return n;
}

/// Runs one suite or "all"; records are ordered by id.
inline std::vector<CheckRecord> run_suite(const std::string& name, const RunConfig& cfg) {
  CheckList out(cfg.timing);
  bool any = false;
  const auto want = [&](const std::string& s) {
    const bool w = name == "all" || name == s;
    any = any || w;
    return w;
  };
  if (want("bialgebra")) suites::bialgebra(cfg, out);
  if (want("classify")) suites::classify(cfg, out);
  if (want("phs")) suites::phs(cfg, out);
  if (want("quantize")) suites::quantize(cfg, out);
  if (want("contract")) suites::contract(cfg, out);
  if (!any) throw ConfigError("unknown suite " + name);
  return out.take();
}

}  // namespace nclorentz
