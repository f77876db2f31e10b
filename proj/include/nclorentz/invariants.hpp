#pragma once

// ad-invariant trivectors: the joint kernel of ad_X on the third exterior
// power, solved exactly at generic parameter values.

#include <string>
#include <vector>

#include "nclorentz/lie_algebra.hpp"
#include "nclorentz/linear_system.hpp"

namespace nclorentz {

inline std::string slot_label(const LieAlgebra& g, const auto& key) {
  std::string s;
  for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "^" : "") + g.labels()[key[i]];
  return s;
}

/// Rows: every component of ad_X(omega) for every basis X; unknowns: the
/// lexicographic slots of omega.
inline LinearSystem invariance_system(const LieAlgebra& g) {
  const auto slots = wedge_slots<3>(g.dim());
  LinearSystem sys;
  for (const auto& s : slots) sys.unknowns.push_back(slot_label(g, s));
  std::vector<std::vector<Trivector>> images(g.dim());
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (const auto& s : slots) images[x].push_back(ad(g, x, Trivector::basis(g.dim(), {s[0], s[1], s[2]})));
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (const auto& out : slots) {
      std::vector<Scalar> row(slots.size());
      for (std::size_t j = 0; j < slots.size(); ++j) row[j] = images[x][j].coeff(out);
      sys.rows.push_back(std::move(row));
    }
  return sys;
}

inline SolutionSpace invariant_trivectors(const LieAlgebra& g) { return solve(invariance_system(g)); }

inline Trivector trivector_from(const LieAlgebra& g, const std::vector<Scalar>& x) {
  const auto slots = wedge_slots<3>(g.dim());
  Trivector t(g.dim());
  for (std::size_t j = 0; j < slots.size(); ++j) t.add_sorted(slots[j], x[j]);
  return t;
}

inline bool is_invariant(const LieAlgebra& g, const Trivector& t) {
  for (std::size_t x = 0; x < g.dim(); ++x)
    if (!ad(g, x, t).is_zero()) return false;
  return true;
}

/// Whether t lies in the span of the invariant trivectors (generic parameters).
inline bool in_invariant_span(const LieAlgebra& g, const Trivector& t) {
  const SolutionSpace inv = invariant_trivectors(g);
  const auto slots = wedge_slots<3>(g.dim());
  LinearSystem sys;
  for (std::size_t k = 0; k < inv.basis.size(); ++k) sys.unknowns.push_back("w" + std::to_string(k));
  sys.unknowns.push_back("t");
  for (std::size_t j = 0; j < slots.size(); ++j) {
    std::vector<Scalar> row;
    for (const auto& b : inv.basis) row.push_back(b[j]);
    row.push_back(t.coeff(slots[j]));
    sys.rows.push_back(std::move(row));
  }
  const SolutionSpace k = solve(sys);
  for (auto f : k.free_columns)
    if (f == inv.basis.size()) return true;
  return false;
}

}  // namespace nclorentz
