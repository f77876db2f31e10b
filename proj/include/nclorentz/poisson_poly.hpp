#pragma once

// Commutative polynomials over the Scalar ring and quadratic Poisson algebras
// stored as a bracket table on generators, extended by the Leibniz rule.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nclorentz/scalar.hpp"

namespace nclorentz {

class Poly {
 public:
  using Exps = std::vector<std::uint8_t>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : n_(nvars) {}

  static Poly var(std::size_t nvars, std::size_t i, const Scalar& coeff = Scalar(1L)) {
    Poly p(nvars);
    Exps e(nvars, 0);
    e.at(i) = 1;
    p.add(e, coeff);
    return p;
  }
  static Poly constant(std::size_t nvars, const Scalar& c) {
    Poly p(nvars);
    p.add(Exps(nvars, 0), c);
    return p;
  }

  std::size_t nvars() const { return n_; }
  const std::map<Exps, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add(const Exps& e, const Scalar& c) {
    if (c.is_zero()) return;
    if (e.size() != n_) throw AlgebraMismatch("monomial has the wrong number of variables");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const { return scaled(Scalar(-1L)); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exps e(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
        r.add(e, ca * cb);
      }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Scalar& s) const {
    Poly r(n_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.add(e, c * s);
    return r;
  }
  friend Poly operator*(const Scalar& s, const Poly& p) { return p.scaled(s); }

  Poly pow(unsigned k) const {
    Poly r = constant(n_, Scalar(1L));
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  Poly derivative(std::size_t i) const {
    Poly r(n_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exps d = e;
      --d[i];
      r.add(d, c.scaled(Rational(e[i])));
    }
    return r;
  }

  /// Substitute variable i by images[i] (all over a common variable set).
  Poly compose(const std::vector<Poly>& images) const {
    if (images.size() != n_) throw AlgebraMismatch("compose needs one image per variable");
    const std::size_t m = images.empty() ? 0 : images.front().nvars();
    Poly r(m);
    for (const auto& [e, c] : terms_) {
      Poly t = constant(m, c);
      for (std::size_t i = 0; i < n_; ++i)
        if (e[i] != 0) t *= images[i].pow(e[i]);
      r += t;
    }
    return r;
  }

  template <typename F>
  Poly map_coeffs(F&& f) const {
    Poly r(n_);
    for (const auto& [e, c] : terms_) r.add(e, f(c));
    return r;
  }

  double evaluate(const std::vector<double>& x, const std::map<Var, double>& params) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
      double t = c.evaluate(params);
      for (std::size_t i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x.at(i);
      sum += t;
    }
    return sum;
  }

  std::string to_string(const std::vector<std::string>& labels) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + it->second.to_string() + ")";
      for (std::size_t i = 0; i < n_; ++i) {
        if (it->first[i] == 0) continue;
        out += "*" + labels.at(i);
        if (it->first[i] > 1) out += "^" + std::to_string(it->first[i]);
      }
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  void check(const Poly& o) const {
    if (n_ != o.n_) throw AlgebraMismatch("polynomials over different variable sets");
  }

  std::size_t n_ = 0;
  std::map<Exps, Scalar> terms_;
};

class PolyPoissonAlgebra {
 public:
  PolyPoissonAlgebra() = default;
  PolyPoissonAlgebra(std::string name, std::vector<std::string> generators)
      : name_(std::move(name)), gens_(std::move(generators)), table_(gens_.size() * gens_.size(), Poly(gens_.size())) {}

  const std::string& name() const { return name_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<std::string>& generators() const { return gens_; }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] == label) return i;
    throw Error("no generator " + label + " in " + name_);
  }
  bool has(const std::string& label) const {
    for (const auto& g : gens_)
      if (g == label) return true;
    return false;
  }

  Poly gen(std::size_t i) const { return Poly::var(size(), i); }
  Poly gen(const std::string& label) const { return gen(index_of(label)); }
  Poly constant(const Scalar& c) const { return Poly::constant(size(), c); }

  void set(std::size_t a, std::size_t b, const Poly& v) {
    table_[a * size() + b] = v;
    table_[b * size() + a] = -v;
  }
  void set(const std::string& a, const std::string& b, const Poly& v) { set(index_of(a), index_of(b), v); }

  const Poly& at(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
  const Poly& at(const std::string& a, const std::string& b) const { return at(index_of(a), index_of(b)); }

  /// {f,g} = sum_{a<b} {s_a,s_b} (d_a f d_b g - d_b f d_a g).
  Poly bracket(const Poly& f, const Poly& g) const {
    Poly r(size());
    std::vector<Poly> df, dg;
    for (std::size_t i = 0; i < size(); ++i) {
      df.push_back(f.derivative(i));
      dg.push_back(g.derivative(i));
    }
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = a + 1; b < size(); ++b) {
        if (at(a, b).is_zero()) continue;
        Poly w = df[a] * dg[b] - df[b] * dg[a];
        if (!w.is_zero()) r += at(a, b) * w;
      }
    return r;
  }

  template <typename F>
  PolyPoissonAlgebra map_coeffs(F&& f) const {
    PolyPoissonAlgebra out(name_, gens_);
    for (std::size_t i = 0; i < table_.size(); ++i) out.table_[i] = table_[i].map_coeffs(f);
    return out;
  }

  friend bool operator==(const PolyPoissonAlgebra& a, const PolyPoissonAlgebra& b) {
    return a.gens_ == b.gens_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::vector<std::string> gens_;
  std::vector<Poly> table_;
};

struct JacobiEntry {
  std::string triple;
  Poly residual;
};

/// {{a,b},c} + {{b,c},a} + {{c,a},b} for every generator triple a<b<c.
inline std::vector<JacobiEntry> jacobi_residual(const PolyPoissonAlgebra& alg) {
  std::vector<JacobiEntry> out;
  const auto& l = alg.generators();
  for (std::size_t a = 0; a < alg.size(); ++a)
    for (std::size_t b = a + 1; b < alg.size(); ++b)
      for (std::size_t c = b + 1; c < alg.size(); ++c) {
        Poly r = alg.bracket(alg.at(a, b), alg.gen(c)) + alg.bracket(alg.at(b, c), alg.gen(a)) +
                 alg.bracket(alg.at(c, a), alg.gen(b));
        out.push_back({l[a] + "," + l[b] + "," + l[c], std::move(r)});
      }
  return out;
}

inline std::vector<JacobiEntry> jacobi_violations(const PolyPoissonAlgebra& alg) {
  std::vector<JacobiEntry> bad;
  for (auto& e : jacobi_residual(alg))
    if (!e.residual.is_zero()) bad.push_back(std::move(e));
  return bad;
}

inline bool casimir_check(const PolyPoissonAlgebra& alg, const Poly& c) {
  for (std::size_t a = 0; a < alg.size(); ++a)
    if (!alg.bracket(c, alg.gen(a)).is_zero()) return false;
  return true;
}

/// Linear change of generators. new_in_old[i] expresses new generator i over
/// the old ones; old_in_new[j] expresses old generator j over the new ones.
inline PolyPoissonAlgebra change_generators(const PolyPoissonAlgebra& alg, std::string name,
                                            std::vector<std::string> labels, const std::vector<Poly>& new_in_old,
                                            const std::vector<Poly>& old_in_new) {
  PolyPoissonAlgebra out(std::move(name), std::move(labels));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      out.set(i, j, alg.bracket(new_in_old.at(i), new_in_old.at(j)).compose(old_in_new));
  return out;
}

/// The same algebra with an extra Poisson-central generator placed first.
inline PolyPoissonAlgebra with_central(const PolyPoissonAlgebra& alg, const std::string& label) {
  std::vector<std::string> labels{label};
  labels.insert(labels.end(), alg.generators().begin(), alg.generators().end());
  PolyPoissonAlgebra out(alg.name(), labels);
  std::vector<Poly> shift;
  for (std::size_t i = 0; i < alg.size(); ++i) shift.push_back(out.gen(i + 1));
  for (std::size_t i = 0; i < alg.size(); ++i)
    for (std::size_t j = i + 1; j < alg.size(); ++j) out.set(i + 1, j + 1, alg.at(i, j).compose(shift));
  return out;
}

namespace poisson_tables {

inline std::vector<std::string> labels4(const std::string& p) { return {p + "0", p + "1", p + "2", p + "3"}; }

/// Type I quadratic algebra, both parameters symbolic.
inline PolyPoissonAlgebra type_I(const std::string& p = "s", const Scalar& z = zs(), const Scalar& zp = zps()) {
  PolyPoissonAlgebra a("type I", labels4(p));
  const Poly s0 = a.gen(0), s1 = a.gen(1), s2 = a.gen(2), s3 = a.gen(3);
  const Poly sp = s0 + s1;
  a.set(0, 1, z * (sp * s2));
  a.set(0, 2, (-z) * (sp * s1 + s3 * s3) - zp * (sp * s3));
  a.set(0, 3, z * (s2 * s3) + zp * (sp * s2));
  a.set(1, 2, (-z) * (sp * s0 - s3 * s3) + zp * (sp * s3));
  a.set(1, 3, (-z) * (s2 * s3) - zp * (sp * s2));
  a.set(2, 3, z * (sp * s3) + zp * (sp * sp));
  return a;
}

inline PolyPoissonAlgebra type_II(const std::string& p = "s", const Scalar& z = zs()) {
  PolyPoissonAlgebra a("type II", labels4(p));
  const Poly s0 = a.gen(0), s1 = a.gen(1), s2 = a.gen(2), s3 = a.gen(3);
  a.set(0, 2, z * (s1 * s3));
  a.set(0, 3, (-z) * (s1 * s2));
  a.set(1, 2, z * (s0 * s3));
  a.set(1, 3, (-z) * (s0 * s2));
  return a;
}

inline PolyPoissonAlgebra type_III(const std::string& p = "s", const Scalar& z = zs()) {
  PolyPoissonAlgebra a("type III", labels4(p));
  const Poly s0 = a.gen(0), s1 = a.gen(1), s2 = a.gen(2);
  const Poly sp = s0 + s1;
  a.set(0, 1, z * (sp * s2));
  a.set(0, 2, (-z) * (sp * s1));
  a.set(1, 2, (-z) * (sp * s0));
  return a;
}

inline PolyPoissonAlgebra newtonian_I(const std::string& p = "s", const Scalar& z = zs(), const Scalar& zp = zps()) {
  PolyPoissonAlgebra a("newtonian type I", labels4(p));
  const Poly s0 = a.gen(0);
  a.set(1, 2, (-z) * (s0 * s0));
  a.set(2, 3, zp * (s0 * s0));
  return a;
}

inline PolyPoissonAlgebra newtonian_II(const std::string& p = "s", const Scalar& z = zs()) {
  PolyPoissonAlgebra a("newtonian type II", labels4(p));
  const Poly s0 = a.gen(0), s2 = a.gen(2), s3 = a.gen(3);
  a.set(1, 2, z * (s0 * s3));
  a.set(1, 3, (-z) * (s0 * s2));
  return a;
}

inline PolyPoissonAlgebra carrollian_I(const std::string& p = "s") {
  return PolyPoissonAlgebra("carrollian type I", labels4(p));
}

inline PolyPoissonAlgebra carrollian_II(const std::string& p = "s", const Scalar& z = zs()) {
  PolyPoissonAlgebra a("carrollian type II", labels4(p));
  const Poly s1 = a.gen(1), s2 = a.gen(2), s3 = a.gen(3);
  a.set(0, 2, z * (s1 * s3));
  a.set(0, 3, (-z) * (s1 * s2));
  return a;
}

/// Quadratic 2+1 Minkowski structure of type III.
inline PolyPoissonAlgebra type_III_2plus1(const std::string& p = "x", const Scalar& z = zs()) {
  PolyPoissonAlgebra a("type III 2+1", {p + "0", p + "1", p + "2"});
  const Poly x0 = a.gen(0), x1 = a.gen(1), x2 = a.gen(2);
  const Poly xp = x0 + x1;
  a.set(0, 1, z * (xp * x2));
  a.set(0, 2, (-z) * (xp * x1));
  a.set(1, 2, (-z) * (xp * x0));
  return a;
}

/// Linear so(2,1) structure used for comparison.
inline PolyPoissonAlgebra so21_reference(const std::string& p = "x", const Scalar& xi = Scalar::var(Var::xi)) {
  PolyPoissonAlgebra a("so(2,1)", {p + "0", p + "1", p + "2"});
  a.set(0, 1, (-xi) * a.gen(2));
  a.set(0, 2, xi * a.gen(1));
  a.set(1, 2, xi * a.gen(0));
  return a;
}

/// Ambient algebra: the quadratic table plus a central s4 in front.
inline PolyPoissonAlgebra ambient(const PolyPoissonAlgebra& quadratic) { return with_central(quadratic, "s4"); }

/// Null-plane generators p-, p+ = p0 -+ p1 followed by the transverse ones,
/// in the order given by `transverse` (labels without prefix, e.g. {"2","3"}).
inline PolyPoissonAlgebra null_plane(const PolyPoissonAlgebra& alg, const std::string& p,
                                     const std::vector<std::string>& transverse) {
  std::vector<std::string> labels{p + "-", p + "+"};
  for (const auto& t : transverse) labels.push_back(p + t);
  const std::size_t n = alg.size(), m = labels.size();
  if (m != n) throw AlgebraMismatch("null-plane change needs every generator");
  std::vector<Poly> new_in_old, old_in_new(n, Poly(m));
  const std::size_t i0 = alg.index_of(p + "0"), i1 = alg.index_of(p + "1");
  new_in_old.push_back(alg.gen(i0) - alg.gen(i1));
  new_in_old.push_back(alg.gen(i0) + alg.gen(i1));
  for (const auto& t : transverse) new_in_old.push_back(alg.gen(p + t));
  const Scalar half(make_rational(1, 2));
  old_in_new[i0] = (Poly::var(m, 0) + Poly::var(m, 1)).scaled(half);
  old_in_new[i1] = (Poly::var(m, 1) - Poly::var(m, 0)).scaled(half);
  for (std::size_t k = 0; k < transverse.size(); ++k) old_in_new[alg.index_of(p + transverse[k])] = Poly::var(m, 2 + k);
  return change_generators(alg, alg.name() + " null-plane", labels, new_in_old, old_in_new);
}

/// (p0)^2 - (p1)^2 - ... over the generators named p0..p3 (those present).
inline Poly lorentz_casimir(const PolyPoissonAlgebra& alg, const std::string& p) {
  Poly c(alg.size());
  for (int k = 0; k < 4; ++k) {
    const std::string l = p + std::to_string(k);
    if (!alg.has(l)) continue;
    const Poly g = alg.gen(l);
    c += k == 0 ? g * g : -(g * g);
  }
  return c;
}

}  // namespace poisson_tables

}  // namespace nclorentz
