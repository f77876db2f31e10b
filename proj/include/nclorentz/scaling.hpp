#pragma once

// Speed-of-light scalings of generators, deformation parameters and
// coordinates, and the algebraic c -> infinity / c -> 0 limits they induce.
// Convention: every scaled quantity is replaced by new = c^k * old.

#include <map>
#include <string>
#include <vector>

#include "nclorentz/bialgebra.hpp"
#include "nclorentz/kinematical.hpp"
#include "nclorentz/poisson_poly.hpp"
#include "nclorentz/representation.hpp"

namespace nclorentz {

enum class PhsType { I, II, III };

inline std::string to_string(PhsType t) {
  switch (t) {
    case PhsType::I:
      return "I";
    case PhsType::II:
      return "II";
    case PhsType::III:
      return "III";
  }
  return "?";
}

struct ScalingMap {
  std::string name;
  /// e'_i = c^generator[i] e_i
  std::vector<int> generator;
  /// p' = c^k p for each listed deformation parameter
  std::map<Var, int> parameter;
  /// x'^mu = c^coordinate[mu] x^mu (geodesic parallel coordinates)
  std::vector<int> coordinate;
  /// s' = c^ambient[k] s on (s4, s0, s1, s2, s3)
  std::vector<int> ambient;
  LimitDirection direction = LimitDirection::to_infinity;

  static Scalar power(int k) { return k == 0 ? Scalar(1L) : Scalar::var(Var::c, k); }
  Scalar gen(std::size_t i) const { return power(generator.at(i)); }

  /// Old parameters in terms of new ones: p_old = c^{-k} p_new.
  Scalar rescale_parameters(const Scalar& s) const {
    Scalar out = s;
    for (const auto& [v, k] : parameter) out = out.substitute(v, Scalar::var(v) * power(-k));
    return out;
  }
  Scalar limit(const Scalar& s) const { return s.limit_c(direction); }
};

/// Identity map on a 10-dimensional algebra.
inline ScalingMap identity_scaling() {
  return {"identity", std::vector<int>(10, 0), {}, std::vector<int>(4, 0), std::vector<int>(5, 0),
          LimitDirection::to_infinity};
}

/// P -> P/c, K -> K/c, c -> infinity.
inline ScalingMap newtonian_map(PhsType t) {
  ScalingMap m{"newtonian", {0, -1, -1, -1, -1, -1, -1, 0, 0, 0}, {}, {0, 1, 1, 1}, {0, 0, 1, 1, 1},
               LimitDirection::to_infinity};
  if (t == PhsType::II) {
    m.parameter = {{Var::z, 1}};
  } else {
    m.parameter = {{Var::z, 2}, {Var::zp, 2}};
  }
  return m;
}

/// P0 -> c P0, K -> c K, c -> 0.
inline ScalingMap carrollian_map(PhsType t) {
  ScalingMap m{"carrollian", {1, 0, 0, 0, 1, 1, 1, 0, 0, 0}, {}, {-1, 0, 0, 0}, {0, -1, 0, 0, 0},
               LimitDirection::to_zero};
  if (t == PhsType::II) {
    m.parameter = {{Var::z, -1}};
  } else {
    m.parameter = {{Var::z, -2}, {Var::zp, -2}};
  }
  return m;
}

/// [e'_i, e'_j] = sum_k c^{a_i + a_j - a_k} C^k_ij e'_k, then the limit.
inline LieAlgebra contract_algebra(const LieAlgebra& g, const ScalingMap& m, const std::string& name) {
  if (m.generator.size() != g.dim()) throw AlgebraMismatch("scaling map does not match " + g.name());
  LieAlgebra out(name, g.labels());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Vec v(g.dim());
      for (const auto& [k, c] : g.bracket(i, j).coeffs()) {
        const Scalar scaled = c * ScalingMap::power(m.generator[i] + m.generator[j] - m.generator[k[0]]);
        try {
          v.add_sorted(k, m.limit(scaled));
        } catch (const DivergentLimit& e) {
          throw DivergentLimit("[" + g.labels()[i] + "," + g.labels()[j] + "]: " + e.what());
        }
      }
      out.set_bracket(i, j, v);
    }
  if (!jacobi_check(out)) throw Error("contracted algebra " + name + " violates Jacobi");
  return out;
}

namespace detail {

template <std::size_t K>
Wedge<K> contract_wedge(const Wedge<K>& w, const ScalingMap& m, int extra, const std::string& what) {
  Wedge<K> out(w.dim());
  for (const auto& [key, c] : w.coeffs()) {
    int k = extra;
    for (auto i : key) k -= m.generator.at(i);
    try {
      out.add_sorted(key, m.limit(m.rescale_parameters(c) * ScalingMap::power(k)));
    } catch (const DivergentLimit& e) {
      throw DivergentLimit(what + ": " + e.what());
    }
  }
  return out;
}

}  // namespace detail

/// r^{ij} e_i ^ e_j = c^{-a_i - a_j} r^{ij} e'_i ^ e'_j with rescaled parameters.
inline RMatrix contract_rmatrix(const RMatrix& r, const ScalingMap& m) {
  return detail::contract_wedge(r, m, 0, "r-matrix");
}

/// delta(e'_i) = c^{a_i} delta(e_i), re-expressed on e' and limited.
inline Cocommutator contract_cocommutator(const LieAlgebra& g, const Cocommutator& d, const ScalingMap& m) {
  Cocommutator out;
  for (std::size_t i = 0; i < d.dim(); ++i)
    out.images.push_back(detail::contract_wedge(d.images[i], m, m.generator[i], "delta(" + g.labels()[i] + ")"));
  return out;
}

/// rho'(e'_i) = lim c^{a_i} D rho(e_i) D^{-1}, D = diag(c^{ambient}).
inline Representation contract_representation(const Representation& rho, const ScalingMap& m) {
  Representation out = rho;
  for (std::size_t g = 0; g < rho.mats.size(); ++g)
    for (std::size_t r = 0; r < rho.size; ++r)
      for (std::size_t c = 0; c < rho.size; ++c) {
        const Scalar& e = rho.at(g, r, c);
        if (e.is_zero()) continue;
        out.at(g, r, c) = m.limit(e * ScalingMap::power(m.generator[g] + m.ambient[r] - m.ambient[c]));
      }
  return out;
}

/// Ambient Poisson algebra on (s4, s0, ..., s3) under s' = c^k s and the
/// parameter scalings: {s'_a, s'_b} = c^{k_a + k_b} {s_a, s_b}(s = c^{-k} s').
inline PolyPoissonAlgebra contract_poisson(const PolyPoissonAlgebra& alg, const ScalingMap& m, std::string name) {
  if (alg.size() != m.ambient.size()) throw AlgebraMismatch("ambient scaling needs one multiplier per generator");
  std::vector<Poly> old_in_new;
  for (std::size_t a = 0; a < alg.size(); ++a) old_in_new.push_back(alg.gen(a).scaled(ScalingMap::power(-m.ambient[a])));
  PolyPoissonAlgebra out(std::move(name), alg.generators());
  for (std::size_t a = 0; a < alg.size(); ++a)
    for (std::size_t b = a + 1; b < alg.size(); ++b) {
      const Scalar f = ScalingMap::power(m.ambient[a] + m.ambient[b]);
      Poly p = alg.at(a, b).compose(old_in_new).map_coeffs([&](const Scalar& s) {
        return m.limit(m.rescale_parameters(s) * f);
      });
      out.set(a, b, p);
    }
  return out;
}

}  // namespace nclorentz
