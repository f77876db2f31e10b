#pragma once

// Exact kernels of linear systems whose entries are Scalars (polynomials in
// the formal parameters). Elimination never divides by a non-constant
// polynomial, so the result is the solution space at generic parameter
// values; specialize() re-solves at fixed values to expose rank drops.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "nclorentz/scalar.hpp"

namespace nclorentz {

struct LinearSystem {
  std::vector<std::string> unknowns;
  std::vector<std::vector<Scalar>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return unknowns.size(); }

  bool parameter_free() const {
    for (const auto& row : rows)
      for (const auto& s : row)
        if (!s.is_constant()) return false;
    return true;
  }
  bool contains(Var v) const {
    for (const auto& row : rows)
      for (const auto& s : row)
        if (s.contains(v)) return true;
    return false;
  }

  LinearSystem specialize(const std::map<Var, Rational>& bindings) const {
    LinearSystem out{unknowns, rows};
    for (auto& row : out.rows)
      for (auto& s : row) s = s.substitute(bindings);
    return out;
  }

  /// Residual A x for a candidate vector.
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
    std::vector<Scalar> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        if (!rows[i][j].is_zero() && !x[j].is_zero()) out[i] += rows[i][j] * x[j];
    return out;
  }
};

struct SolutionSpace {
  std::size_t dimension = 0;
  /// One kernel vector per free column; entry at its own free column is
  /// nonzero and all other free entries are zero.
  std::vector<std::vector<Scalar>> basis;
  std::vector<std::size_t> pivot_columns;
  std::vector<std::size_t> free_columns;

  std::size_t rank() const { return pivot_columns.size(); }
};

namespace detail {

inline bool pivot_better(const Scalar& a, const Scalar& b) {
  const bool ca = a.is_constant(), cb = b.is_constant();
  if (ca != cb) return ca;
  if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
  return a.leading_term().first.degree() < b.leading_term().first.degree();
}

inline void scale_row(std::vector<Scalar>& row, const Rational& q) {
  for (auto& s : row)
    if (!s.is_zero()) s = s.scaled(q);
}

/// Divide a row by the rational content of its entries.
inline void make_primitive(std::vector<Scalar>& row) {
  Scalar all;
  mpz_class g = 0, l = 1;
  bool any = false;
  for (const auto& s : row)
    for (const auto& t : s.terms()) {
      mpz_class n = abs(t.second.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den().get_mpz_t());
      any = true;
    }
  if (!any) return;
  Rational c(g, l);
  c.canonicalize();
  if (c != 1) scale_row(row, Rational(1) / c);
}

}  // namespace detail

/// Kernel of the system at generic parameter values.
inline SolutionSpace solve(const LinearSystem& sys) {
  const std::size_t ncols = sys.col_count();
  std::vector<std::vector<Scalar>> a;
  a.reserve(sys.rows.size());
  for (const auto& row : sys.rows) {
    bool nonzero = std::any_of(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (nonzero) a.push_back(row);
  }

  SolutionSpace out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < a.size(); ++col) {
    std::size_t best = a.size();
    for (std::size_t i = r; i < a.size(); ++i)
      if (!a[i][col].is_zero() && (best == a.size() || detail::pivot_better(a[i][col], a[best][col]))) best = i;
    if (best == a.size()) continue;
    std::swap(a[r], a[best]);
    Scalar p = a[r][col];
    if (p.is_constant()) {
      detail::scale_row(a[r], Rational(1) / p.constant_value());
      p = Scalar(1L);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      const Scalar f = a[i][col];
      for (std::size_t j = 0; j < ncols; ++j) {
        if (a[r][j].is_zero()) {
          if (!p.is_constant() && !a[i][j].is_zero()) a[i][j] = p * a[i][j];
          continue;
        }
        a[i][j] = (p.is_constant() ? a[i][j] : p * a[i][j]) - f * a[r][j];
      }
      if (!p.is_constant()) detail::make_primitive(a[i]);
    }
    out.pivot_columns.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (auto c : out.pivot_columns) is_pivot[c] = true;
  for (std::size_t c = 0; c < ncols; ++c)
    if (!is_pivot[c]) out.free_columns.push_back(c);

  // Common multiple of the pivot entries.
  std::vector<Scalar> distinct;
  for (std::size_t i = 0; i < out.pivot_columns.size(); ++i) {
    const Scalar d = a[i][out.pivot_columns[i]].normalized();
    if (!d.is_constant() && std::find(distinct.begin(), distinct.end(), d) == distinct.end()) distinct.push_back(d);
  }
  Scalar lcm(1L);
  for (const auto& d : distinct) lcm *= d;

  for (auto f : out.free_columns) {
    std::vector<Scalar> x(ncols);
    x[f] = lcm;
    for (std::size_t i = 0; i < out.pivot_columns.size(); ++i) {
      if (a[i][f].is_zero()) continue;
      x[out.pivot_columns[i]] = -(a[i][f] * lcm.exact_div(a[i][out.pivot_columns[i]]));
    }
    out.basis.push_back(std::move(x));
  }
  out.dimension = out.basis.size();
  return out;
}

/// Dimension at generic parameters plus re-solves at special values.
struct SolveReport {
  SolutionSpace generic;
  struct Special {
    Rational value;
    std::size_t dimension;
  };
  std::vector<Special> specials;
  /// Special values where the solution space grows (rank drop).
  std::vector<Rational> rank_drops;
};

inline SolveReport solve_with_specials(const LinearSystem& sys, Var param, const std::vector<Rational>& values) {
  SolveReport rep;
  rep.generic = solve(sys);
  for (const auto& v : values) {
    const std::size_t d = solve(sys.specialize({{param, v}})).dimension;
    rep.specials.push_back({v, d});
    if (d != rep.generic.dimension) rep.rank_drops.push_back(v);
  }
  return rep;
}

}  // namespace nclorentz
