#pragma once

// Quadratic noncommutative algebras given by rewrite rules on adjacent
// generator pairs, with ordered-monomial normal forms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nclorentz/bialgebra.hpp"
#include "nclorentz/kinematical.hpp"
#include "nclorentz/poisson_poly.hpp"

namespace nclorentz {

/// Free word; letters are generator indices in the algebra's monomial order.
using Word = std::vector<std::uint8_t>;

/// Linear combination of words. Normal-form results contain only sorted words.
struct NCPolynomial {
  std::map<Word, Scalar> terms;

  bool is_zero() const { return terms.empty(); }

  void add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  NCPolynomial& operator+=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  NCPolynomial& operator-=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
  }
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  NCPolynomial scaled(const Scalar& s) const {
    NCPolynomial r;
    for (const auto& [w, c] : terms) r.add(w, c * s);
    return r;
  }
  friend NCPolynomial operator*(const Scalar& s, const NCPolynomial& p) { return p.scaled(s); }

  /// Concatenation product.
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial r;
    for (const auto& [wa, ca] : a.terms)
      for (const auto& [wb, cb] : b.terms) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add(w, ca * cb);
      }
    return r;
  }

  static NCPolynomial word(const Word& w, const Scalar& c = Scalar(1L)) {
    NCPolynomial p;
    p.add(w, c);
    return p;
  }

  template <typename F>
  NCPolynomial map_coeffs(F&& f) const {
    NCPolynomial r;
    for (const auto& [w, c] : terms) r.add(w, f(c));
    return r;
  }

  std::string to_string(const std::vector<std::string>& labels) const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      for (auto l : w) out += "*" + labels.at(l);
    }
    return out;
  }

  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;
};

enum class Strategy { leftmost, rightmost };

class NCAlgebra {
 public:
  NCAlgebra() = default;
  /// Generators listed in the ordered-monomial order.
  NCAlgebra(std::string name, std::vector<std::string> order) : name_(std::move(name)), gens_(std::move(order)) {
    rules_.assign(gens_.size() * gens_.size(), std::nullopt);
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  std::size_t index_of(const std::string& l) const {
    auto it = std::find(gens_.begin(), gens_.end(), l);
    if (it == gens_.end()) throw Error("no generator " + l + " in " + name_);
    return static_cast<std::size_t>(it - gens_.begin());
  }

  NCPolynomial gen(const std::string& l) const { return NCPolynomial::word({static_cast<std::uint8_t>(index_of(l))}); }
  /// Word from labels, e.g. word({"x2", "x-"}).
  NCPolynomial word(const std::vector<std::string>& ls, const Scalar& c = Scalar(1L)) const {
    Word w;
    for (const auto& l : ls) w.push_back(static_cast<std::uint8_t>(index_of(l)));
    return NCPolynomial::word(w, c);
  }

  /// Imposes [x, y] = rhs. rhs must already be ordered.
  void relation(const std::string& x, const std::string& y, const NCPolynomial& rhs) {
    const std::size_t i = index_of(x), j = index_of(y);
    if (i == j) throw Error("relation of a generator with itself");
    for (const auto& [w, c] : rhs.terms)
      if (!std::is_sorted(w.begin(), w.end()))
        throw Error("right side of [" + x + "," + y + "] is not in normal order");
    // hi lo -> lo hi + (x y - y x) with the sign fixed by which of x, y is hi
    const std::size_t hi = std::max(i, j), lo = std::min(i, j);
    rules_[hi * size() + lo] = i == hi ? rhs : rhs.scaled(Scalar(-1L));
  }

  /// Commutator part of the rule for the out-of-order pair (hi, lo), if any.
  const std::optional<NCPolynomial>& rule(std::size_t hi, std::size_t lo) const { return rules_[hi * size() + lo]; }

  NCPolynomial commutator(const NCPolynomial& a, const NCPolynomial& b) const { return a * b - b * a; }

  template <typename F>
  NCAlgebra map_coeffs(F&& f) const {
    NCAlgebra out = *this;
    for (auto& r : out.rules_)
      if (r) r = r->map_coeffs(f);
    return out;
  }

 private:
  std::string name_;
  std::vector<std::string> gens_;
  /// Missing rule means the pair commutes.
  std::vector<std::optional<NCPolynomial>> rules_;
};

namespace detail {

inline std::optional<std::size_t> inversion(const Word& w, Strategy s) {
  if (w.size() < 2) return std::nullopt;
  if (s == Strategy::leftmost) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] > w[k + 1]) return k;
  } else {
    for (std::size_t k = w.size() - 1; k-- > 0;)
      if (w[k] > w[k + 1]) return k;
  }
  return std::nullopt;
}

/// One rewrite of w at position k.
inline NCPolynomial rewrite_at(const NCAlgebra& alg, const Word& w, std::size_t k, const Scalar& c) {
  NCPolynomial out;
  Word swapped = w;
  std::swap(swapped[k], swapped[k + 1]);
  out.add(swapped, c);
  if (const auto& r = alg.rule(w[k], w[k + 1])) {
    for (const auto& [rw, rc] : r->terms) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 2, w.end());
      out.add(nw, c * rc);
    }
  }
  return out;
}

}  // namespace detail

inline NCPolynomial normal_form(const NCAlgebra& alg, const NCPolynomial& p, Strategy s = Strategy::leftmost,
                                std::size_t max_steps = 1000000) {
  std::map<Word, Scalar> pending = p.terms;
  NCPolynomial done;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    const Word w = it->first;
    const Scalar c = it->second;
    pending.erase(it);
    const auto k = detail::inversion(w, s);
    if (!k) {
      done.add(w, c);
      continue;
    }
    if (++steps > max_steps) throw NonTermination("normal form of a word in " + alg.name() + " exceeded the step bound");
    for (const auto& [nw, nc] : detail::rewrite_at(alg, w, *k, c).terms) {
      auto [jt, inserted] = pending.try_emplace(nw, nc);
      if (!inserted) {
        jt->second += nc;
        if (jt->second.is_zero()) pending.erase(jt);
      }
    }
  }
  return done;
}

inline NCPolynomial normal_form(const NCAlgebra& alg, const Word& w, Strategy s = Strategy::leftmost,
                                std::size_t max_steps = 1000000) {
  return normal_form(alg, NCPolynomial::word(w), s, max_steps);
}

struct OverlapFailure {
  std::string triple;
  NCPolynomial difference;
};

struct ConfluenceReport {
  std::size_t overlaps = 0;
  std::vector<OverlapFailure> failures;
  bool confluent() const { return failures.empty(); }
};

/// Every overlap c b a with c > b > a, reduced at the left pair first and at
/// the right pair first.
inline ConfluenceReport confluence_check(const NCAlgebra& alg) {
  ConfluenceReport rep;
  const std::size_t n = alg.size();
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t b = 0; b < c; ++b)
      for (std::size_t a = 0; a < b; ++a) {
        const Word w{static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(a)};
        ++rep.overlaps;
        const NCPolynomial left = normal_form(alg, detail::rewrite_at(alg, w, 0, Scalar(1L)));
        const NCPolynomial right = normal_form(alg, detail::rewrite_at(alg, w, 1, Scalar(1L)));
        NCPolynomial diff = left - right;
        if (!diff.is_zero()) {
          const auto& l = alg.generators();
          rep.failures.push_back({l[c] + " " + l[b] + " " + l[a], std::move(diff)});
        }
      }
  return rep;
}

inline bool central_check(const NCAlgebra& alg, const NCPolynomial& c) {
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const NCPolynomial g = NCPolynomial::word({static_cast<std::uint8_t>(i)});
    if (!normal_form(alg, c * g - g * c).is_zero()) return false;
  }
  return true;
}

/// Ordered normal form read as a commutative polynomial over `poisson`'s
/// generators, matched by label.
inline Poly to_commutative(const NCAlgebra& alg, const NCPolynomial& p, const PolyPoissonAlgebra& poisson) {
  std::vector<std::size_t> map;
  for (const auto& l : alg.generators()) map.push_back(poisson.index_of(l));
  Poly out(poisson.size());
  for (const auto& [w, c] : p.terms) {
    Poly::Exps e(poisson.size(), 0);
    for (auto l : w) ++e[map[l]];
    out.add(e, c);
  }
  return out;
}

/// Drops coefficient terms of total degree > 1 in z, z'.
inline Poly first_order_part(const Poly& p) {
  return p.map_coeffs([](const Scalar& s) {
    Scalar r;
    for (const auto& [m, q] : s.terms())
      if (m[Var::z] + m[Var::zp] <= 1) r += Scalar::monomial(m, q);
    return r;
  });
}

struct SemiclassicalEntry {
  std::string pair;
  Poly commutator;
  Poly poisson;
  bool matches() const { return commutator == poisson; }
  bool matches_first_order() const { return first_order_part(commutator) == poisson; }
};

struct SemiclassicalReport {
  std::vector<SemiclassicalEntry> entries;
  bool ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const SemiclassicalEntry& e) { return e.matches(); });
  }
  bool ok_first_order() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const SemiclassicalEntry& e) { return e.matches_first_order(); });
  }
};

inline SemiclassicalReport semiclassical_check(const NCAlgebra& alg, const PolyPoissonAlgebra& poisson) {
  SemiclassicalReport rep;
  const auto& l = alg.generators();
  for (std::size_t i = 0; i < alg.size(); ++i)
    for (std::size_t j = i + 1; j < alg.size(); ++j) {
      const NCPolynomial gi = NCPolynomial::word({static_cast<std::uint8_t>(i)});
      const NCPolynomial gj = NCPolynomial::word({static_cast<std::uint8_t>(j)});
      rep.entries.push_back({l[i] + "," + l[j], to_commutative(alg, normal_form(alg, gi * gj - gj * gi), poisson),
                             poisson.bracket(poisson.gen(l[i]), poisson.gen(l[j]))});
    }
  return rep;
}

/// No component of delta in t^t, t the span of the P generators.
inline bool first_order_vanishing(const LieAlgebra& g, const Cocommutator& d) {
  const auto t = translation_indices(g);
  auto in_t = [&](std::size_t i) { return std::find(t.begin(), t.end(), i) != t.end(); };
  for (const auto& img : d.images)
    for (const auto& [k, v] : img.coeffs())
      if (in_t(k[0]) && in_t(k[1])) return false;
  return true;
}

namespace nc_algebras {

namespace detail {

/// Short-hand: monomial of labels with coefficient.
inline NCPolynomial m(const NCAlgebra& a, const Scalar& c, const std::vector<std::string>& ls) { return a.word(ls, c); }

}  // namespace detail

/// Null-plane type I with z = 0; order (x-, x+, x3, x2).
inline NCAlgebra type_I_zprime(const std::string& p = "x", const Scalar& zp = zps()) {
  using detail::m;
  NCAlgebra a("type I (z=0) null-plane", {p + "-", p + "+", p + "3", p + "2"});
  const std::string xm = p + "-", xp = p + "+", x2 = p + "2", x3 = p + "3";
  a.relation(xm, x2, m(a, -Scalar(2L) * zp, {xp, x3}));
  a.relation(xm, x3, m(a, Scalar(2L) * zp, {xp, x2}));
  a.relation(x2, x3, m(a, zp, {xp, xp}));
  return a;
}

/// Null-plane type I with z' = 0; order (x-, x+, x3, x2).
inline NCAlgebra type_I_z(const std::string& p = "x", const Scalar& z = zs()) {
  using detail::m;
  NCAlgebra a("type I (z'=0) null-plane", {p + "-", p + "+", p + "3", p + "2"});
  const std::string xm = p + "-", xp = p + "+", x2 = p + "2", x3 = p + "3";
  a.relation(xm, xp, m(a, Scalar(2L) * z, {xp, x2}));
  a.relation(xm, x2, m(a, z, {xm, xp}) + m(a, -Scalar(2L) * z, {x3, x3}));
  a.relation(xm, x3, m(a, Scalar(2L) * z, {x3, x2}));
  a.relation(x2, x3, m(a, z, {xp, x3}));
  a.relation(xp, x2, m(a, -z, {xp, xp}));
  return a;
}

/// Both subfamilies together. The z' term of [x-, x3] is read symmetrically,
/// z'(x+ x2 + x2 x+) = 2z' x+ x2 + z z' (x+)^2; the plain ordered reading
/// (symmetric = false) is not confluent.
inline NCAlgebra type_I(const std::string& p = "x", const Scalar& z = zs(), const Scalar& zp = zps(),
                        bool symmetric = true) {
  using detail::m;
  NCAlgebra a("type I null-plane", {p + "-", p + "+", p + "3", p + "2"});
  const std::string xm = p + "-", xp = p + "+", x2 = p + "2", x3 = p + "3";
  a.relation(xm, xp, m(a, Scalar(2L) * z, {xp, x2}));
  a.relation(xm, x2, m(a, z, {xm, xp}) + m(a, -Scalar(2L) * z, {x3, x3}) + m(a, -Scalar(2L) * zp, {xp, x3}));
  NCPolynomial r = m(a, Scalar(2L) * z, {x3, x2}) + m(a, Scalar(2L) * zp, {xp, x2});
  if (symmetric) r += m(a, z * zp, {xp, xp});
  a.relation(xm, x3, r);
  a.relation(x2, x3, m(a, z, {xp, x3}) + m(a, zp, {xp, xp}));
  a.relation(xp, x2, m(a, -z, {xp, xp}));
  return a;
}

/// Type II; order (x0, x1, x2, x3).
inline NCAlgebra type_II(const std::string& p = "x", const Scalar& z = zs()) {
  using detail::m;
  NCAlgebra a("type II", {p + "0", p + "1", p + "2", p + "3"});
  const std::string x0 = p + "0", x1 = p + "1", x2 = p + "2", x3 = p + "3";
  a.relation(x0, x2, m(a, z, {x1, x3}));
  a.relation(x0, x3, m(a, -z, {x1, x2}));
  a.relation(x1, x2, m(a, z, {x0, x3}));
  a.relation(x1, x3, m(a, -z, {x0, x2}));
  return a;
}

/// Type III in 2+1 null-plane form; order (x-, x+, x2).
inline NCAlgebra type_III(const std::string& p = "x", const Scalar& z = zs()) {
  using detail::m;
  NCAlgebra a("type III null-plane", {p + "-", p + "+", p + "2"});
  const std::string xm = p + "-", xp = p + "+", x2 = p + "2";
  a.relation(x2, xp, m(a, z, {xp, xp}));
  a.relation(x2, xm, m(a, -z, {xm, xp}));
  a.relation(xm, xp, m(a, Scalar(2L) * z, {xp, x2}));
  return a;
}

/// Linear null-plane structure from earlier work, kept for comparison only.
inline NCAlgebra null_plane_linear_reference(const std::string& p = "x", const Scalar& z = zs()) {
  using detail::m;
  NCAlgebra a("linear null-plane reference", {p + "-", p + "+", p + "2", p + "3"});
  const std::string xm = p + "-", xp = p + "+", x2 = p + "2", x3 = p + "3";
  a.relation(xp, xm, m(a, -Scalar(2L) * z, {xm}));
  a.relation(xp, x2, m(a, -Scalar(2L) * z, {x2}));
  a.relation(xp, x3, m(a, -Scalar(2L) * z, {x3}));
  return a;
}

inline NCAlgebra newtonian_I(const std::string& p = "s", const Scalar& z = zs(), const Scalar& zp = zps()) {
  using detail::m;
  NCAlgebra a("newtonian type I", {p + "0", p + "1", p + "2", p + "3"});
  a.relation(p + "1", p + "2", m(a, -z, {p + "0", p + "0"}));
  a.relation(p + "2", p + "3", m(a, zp, {p + "0", p + "0"}));
  return a;
}

inline NCAlgebra newtonian_II(const std::string& p = "s", const Scalar& z = zs()) {
  using detail::m;
  NCAlgebra a("newtonian type II", {p + "0", p + "1", p + "2", p + "3"});
  a.relation(p + "1", p + "2", m(a, z, {p + "0", p + "3"}));
  a.relation(p + "1", p + "3", m(a, -z, {p + "0", p + "2"}));
  return a;
}

inline NCAlgebra carrollian_I(const std::string& p = "s") {
  return NCAlgebra("carrollian type I", {p + "0", p + "1", p + "2", p + "3"});
}

inline NCAlgebra carrollian_II(const std::string& p = "s", const Scalar& z = zs()) {
  using detail::m;
  NCAlgebra a("carrollian type II", {p + "0", p + "1", p + "2", p + "3"});
  a.relation(p + "0", p + "2", m(a, z, {p + "1", p + "3"}));
  a.relation(p + "0", p + "3", m(a, -z, {p + "1", p + "2"}));
  return a;
}

/// x- x+ - (x2)^2 - (x3)^2 (the x3 term only when x3 is a generator).
inline NCPolynomial null_plane_casimir(const NCAlgebra& a, const std::string& p = "x") {
  NCPolynomial c = a.word({p + "-", p + "+"}) - a.word({p + "2", p + "2"});
  const auto& g = a.generators();
  if (std::find(g.begin(), g.end(), p + "3") != g.end()) c -= a.word({p + "3", p + "3"});
  return c;
}

}  // namespace nc_algebras

}  // namespace nclorentz
