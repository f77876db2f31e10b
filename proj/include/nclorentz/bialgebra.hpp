#pragma once

// Coboundary Lie bialgebras: cocommutator delta_r(X) = ad_X(r), the algebraic
// Schouten bracket [[r,r]], (modified) classical Yang-Baxter residuals and the
// sub-bialgebra / coisotropy predicates.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nclorentz/kinematical.hpp"
#include "nclorentz/lie_algebra.hpp"
#include "nclorentz/wedge.hpp"

namespace nclorentz {

using RMatrix = Bivector;

/// delta on each basis element.
struct Cocommutator {
  std::vector<Bivector> images;

  std::size_t dim() const { return images.size(); }

  Bivector operator()(const Vec& x) const {
    Bivector r(images.size());
    for (const auto& [k, v] : x.coeffs()) r += images.at(k[0]).scaled(v);
    return r;
  }

  bool is_zero() const {
    return std::all_of(images.begin(), images.end(), [](const Bivector& b) { return b.is_zero(); });
  }

  template <typename F>
  Cocommutator map_coeffs(F&& f) const {
    Cocommutator out;
    for (const auto& b : images) out.images.push_back(b.map_coeffs(f));
    return out;
  }

  friend bool operator==(const Cocommutator&, const Cocommutator&) = default;
};

inline Cocommutator cocommutator(const LieAlgebra& g, const RMatrix& r) {
  g.check(r);
  Cocommutator d;
  for (std::size_t i = 0; i < g.dim(); ++i) d.images.push_back(ad(g, i, r));
  return d;
}

/// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23]. The sum is totally
/// antisymmetric, so accumulating every ordered component into the wedge
/// basis with its permutation sign counts each sorted component six times.
inline Trivector schouten(const LieAlgebra& g, const RMatrix& r) {
  g.check(r);
  struct Entry {
    std::size_t i, j;
    Scalar v;
  };
  // r = sum r^{ij} e_i (x) e_j with r^{ij} = -r^{ji}.
  std::vector<Entry> full;
  for (const auto& [k, v] : r.coeffs()) {
    full.push_back({k[0], k[1], v});
    full.push_back({k[1], k[0], -v});
  }
  Trivector acc(g.dim());
  for (const auto& x : full)
    for (const auto& y : full) {
      const Scalar c = x.v * y.v;
      // [r12,r13]: [e_i,e_k] (x) e_j (x) e_l
      for (const auto& [kb, vb] : g.bracket(x.i, y.i).coeffs()) acc.add_unsorted({kb[0], x.j, y.j}, c * vb);
      // [r12,r23]: e_i (x) [e_j,e_k] (x) e_l
      for (const auto& [kb, vb] : g.bracket(x.j, y.i).coeffs()) acc.add_unsorted({x.i, kb[0], y.j}, c * vb);
      // [r13,r23]: e_i (x) e_k (x) [e_j,e_l]
      for (const auto& [kb, vb] : g.bracket(x.j, y.j).coeffs()) acc.add_unsorted({x.i, y.i, kb[0]}, c * vb);
    }
  return acc.scaled(Scalar(make_rational(1, 6)));
}

/// ad_X [[r,r]] for every basis X; all zero iff r solves the modified CYBE.
struct McybeResidual {
  Trivector schouten;
  std::vector<Trivector> components;

  bool vanishes() const {
    return std::all_of(components.begin(), components.end(), [](const Trivector& t) { return t.is_zero(); });
  }
  bool triangular() const { return schouten.is_zero(); }
};

inline McybeResidual mcybe_residual(const LieAlgebra& g, const RMatrix& r) {
  McybeResidual res{schouten(g, r), {}};
  for (std::size_t i = 0; i < g.dim(); ++i) res.components.push_back(ad(g, i, res.schouten));
  return res;
}

/// Distinct polynomial conditions (up to rational multiples) carried by a residual.
inline std::vector<Scalar> distinct_conditions(const McybeResidual& res) {
  std::vector<Scalar> out;
  for (const auto& t : res.components)
    for (const auto& [k, v] : t.coeffs()) {
      Scalar n = v.normalized();
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
  return out;
}

/// 1-cocycle identity delta([X,Y]) = ad_X delta(Y) - ad_Y delta(X) on basis pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> cocycle_violations(const LieAlgebra& g,
                                                                        const Cocommutator& d) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Bivector lhs = d(g.bracket(i, j));
      Bivector rhs = ad(g, i, d.images[j]) - ad(g, j, d.images[i]);
      if (!(lhs == rhs)) bad.emplace_back(i, j);
    }
  return bad;
}

/// co-Jacobi: the cyclic sum of (delta (x) id) delta(X) vanishes; returns offending X.
inline std::vector<std::size_t> cojacobi_violations(const Cocommutator& d) {
  const std::size_t n = d.dim();
  auto full = [n](const Bivector& b) {
    std::vector<Scalar> m(n * n);
    for (const auto& [k, v] : b.coeffs()) {
      m[k[0] * n + k[1]] = v;
      m[k[1] * n + k[0]] = -v;
    }
    return m;
  };
  std::vector<std::vector<Scalar>> dm;
  for (const auto& b : d.images) dm.push_back(full(b));
  std::vector<std::size_t> bad;
  for (std::size_t x = 0; x < n; ++x) {
    const auto& dx = dm[x];
    // T^{pqr} = sum_a D^{ar}(X) D^{pq}(e_a)
    std::vector<Scalar> t(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t rr = 0; rr < n; ++rr) {
        const Scalar& c = dx[a * n + rr];
        if (c.is_zero()) continue;
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            const Scalar& e = dm[a][p * n + q];
            if (!e.is_zero()) t[(p * n + q) * n + rr] += c * e;
          }
      }
    bool ok = true;
    for (std::size_t p = 0; p < n && ok; ++p)
      for (std::size_t q = 0; q < n && ok; ++q)
        for (std::size_t rr = 0; rr < n && ok; ++rr) {
          Scalar s = t[(p * n + q) * n + rr] + t[(q * n + rr) * n + p] + t[(rr * n + p) * n + q];
          if (!s.is_zero()) ok = false;
        }
    if (!ok) bad.push_back(x);
  }
  return bad;
}

/// delta(h) in h^h.
inline bool is_sub_bialgebra(const Cocommutator& d, const Subalgebra& h) {
  for (auto i : h.indices)
    for (const auto& [k, v] : d.images.at(i).coeffs())
      if (!h.contains(k[0]) || !h.contains(k[1])) return false;
  return true;
}

/// delta(h) in h^g.
inline bool is_coisotropic(const Cocommutator& d, const Subalgebra& h) {
  for (auto i : h.indices)
    for (const auto& [k, v] : d.images.at(i).coeffs())
      if (!h.contains(k[0]) && !h.contains(k[1])) return false;
  return true;
}

/// Does every delta(X), X in `from`, lie in span{e_a ^ e_b : a in A, b in B}?
inline bool maps_into(const Cocommutator& d, const std::vector<std::size_t>& from, const std::vector<std::size_t>& a,
                      const std::vector<std::size_t>& b) {
  auto in = [](const std::vector<std::size_t>& s, std::size_t i) { return std::find(s.begin(), s.end(), i) != s.end(); };
  for (auto i : from)
    for (const auto& [k, v] : d.images.at(i).coeffs())
      if (!((in(a, k[0]) && in(b, k[1])) || (in(b, k[0]) && in(a, k[1])))) return false;
  return true;
}

struct NamedElement {
  std::string name;
  Vec value;
};

/// All basis elements plus the null-plane combinations that exist in g.
inline std::vector<NamedElement> default_candidates(const LieAlgebra& g) {
  std::vector<NamedElement> out;
  for (std::size_t i = 0; i < g.dim(); ++i) out.push_back({g.labels()[i], g.e(i)});
  auto add = [&](const std::string& name, const std::string& a, long sa, const std::string& b, long sb) {
    if (g.has(a) && g.has(b)) out.push_back({name, combo(g, {{a, Scalar(sa)}, {b, Scalar(sb)}})});
  };
  add("P+", "P0", 1, "P1", 1);
  add("P-", "P0", 1, "P1", -1);
  add("K2+J3", "K2", 1, "J3", 1);
  add("K2-J3", "K2", 1, "J3", -1);
  add("K3+J2", "K3", 1, "J2", 1);
  add("K3-J2", "K3", 1, "J2", -1);
  return out;
}

inline std::vector<std::string> primitive_generators(const Cocommutator& d, const std::vector<NamedElement>& candidates) {
  std::vector<std::string> out;
  for (const auto& c : candidates)
    if (d(c.value).is_zero()) out.push_back(c.name);
  return out;
}

/// gamma with [K1, X] = gamma X, if X is an eigenvector.
inline std::optional<Rational> goodness(const LieAlgebra& g, const Vec& x) {
  if (x.is_zero()) return std::nullopt;
  const Vec img = g.bracket(g.e("K1"), x);
  const auto& [k0, v0] = *x.coeffs().begin();
  const Scalar ratio_num = img.coeff(k0);
  if (!ratio_num.is_constant() || !v0.is_constant()) return std::nullopt;
  const Rational gamma = ratio_num.constant_value() / v0.constant_value();
  if (!(img == x.scaled(Scalar(gamma)))) return std::nullopt;
  return gamma;
}

}  // namespace nclorentz
