#pragma once

// Exact coefficient ring: sparse multivariate Laurent polynomials over Q in a
// fixed set of formal parameters.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nclorentz/errors.hpp"

namespace nclorentz {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Formal parameters. Lambda, z, zp (z'), c are the physical ones; the rest
/// parametrize r-matrix families and ansatz unknowns.
enum class Var : std::uint8_t {
  Lambda,
  z,
  zp,
  c,
  alpha,
  beta,
  eta,
  chi,
  chip,
  gamma,
  xi,
  a1, a2, a3, a4, a5, a6,
  b1, b2, b3, b4, b5, b6,
  c1, c2, c3,
  kCount
};

inline constexpr std::size_t kNumVars = static_cast<std::size_t>(Var::kCount);

inline std::string_view var_name(Var v) {
  static constexpr std::array<std::string_view, kNumVars> names = {
      "Lambda", "z",  "zp", "c",  "alpha", "beta", "eta", "chi", "chip",
      "gamma",  "xi", "a1", "a2", "a3",    "a4",   "a5",  "a6",  "b1",
      "b2",     "b3", "b4", "b5", "b6",    "c1",   "c2",  "c3"};
  return names[static_cast<std::size_t>(v)];
}

struct Monomial {
  std::array<std::int16_t, kNumVars> exp{};

  int degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  std::int16_t operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }
  std::int16_t& operator[](Var v) { return exp[static_cast<std::size_t>(v)]; }
  bool is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kNumVars; ++i) m.exp[i] = static_cast<std::int16_t>(a.exp[i] + b.exp[i]);
    return m;
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kNumVars; ++i) m.exp[i] = static_cast<std::int16_t>(a.exp[i] - b.exp[i]);
    return m;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order; a group order on Z^n, so leading terms multiply.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exp < b.exp;
}

enum class LimitDirection { to_infinity, to_zero };

class Scalar {
 public:
  using Term = std::pair<Monomial, Rational>;

  Scalar() = default;
  Scalar(long v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) terms_.emplace_back(Monomial{}, Rational(v));
  }
  Scalar(const Rational& q) {  // NOLINT(google-explicit-constructor)
    if (q != 0) terms_.emplace_back(Monomial{}, q);
  }

  static Scalar var(Var v, int power = 1) {
    Monomial m;
    m[v] = static_cast<std::int16_t>(power);
    return monomial(m, Rational(1));
  }
  static Scalar monomial(const Monomial& m, const Rational& coeff) {
    Scalar s;
    if (coeff != 0) s.terms_.emplace_back(m, coeff);
    return s;
  }

  /// Terms in descending graded-lex order; no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Rational constant_value() const {
    for (const auto& [m, q] : terms_)
      if (m.is_one()) return q;
    return Rational(0);
  }
  bool contains(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.first[v] != 0; });
  }
  int max_exponent(Var v) const {
    int e = 0;
    bool first = true;
    for (const auto& t : terms_) {
      if (first || t.first[v] > e) e = t.first[v];
      first = false;
    }
    return e;
  }
  int min_exponent(Var v) const {
    int e = 0;
    bool first = true;
    for (const auto& t : terms_) {
      if (first || t.first[v] < e) e = t.first[v];
      first = false;
    }
    return e;
  }
  const Term& leading_term() const { return terms_.front(); }
  const Term& trailing_term() const { return terms_.back(); }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return merge(a, b, false); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return merge(a, b, true); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a.scaled(b.terms_[0].second);
    if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b.scaled(a.terms_[0].second);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, qa] : a.terms_)
      for (const auto& [mb, qb] : b.terms_) prod.emplace_back(ma * mb, qa * qb);
    return from_unsorted(std::move(prod));
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar scaled(const Rational& q) const {
    if (q == 0) return {};
    Scalar r = *this;
    for (auto& t : r.terms_) t.second *= q;
    return r;
  }

  Scalar pow(unsigned n) const {
    Scalar r(1L), base = *this;
    while (n) {
      if (n & 1u) r *= base;
      base = base * base;
      n >>= 1u;
    }
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Exact evaluation at rational values; unbound parameters survive.
  Scalar substitute(const std::map<Var, Rational>& bindings) const {
    std::vector<Term> out;
    for (const auto& [m, q] : terms_) {
      Monomial rest = m;
      Rational coeff = q;
      for (const auto& [v, val] : bindings) {
        const int e = m[v];
        if (e == 0) continue;
        if (val == 0) {
          if (e < 0)
            throw DivisionByZero("parameter " + std::string(var_name(v)) + " bound to 0 carries exponent " +
                                 std::to_string(e));
          coeff = 0;
          break;
        }
        Rational p(1);
        for (int i = 0; i < std::abs(e); ++i) p *= val;
        coeff = e > 0 ? Rational(coeff * p) : Rational(coeff / p);
        rest[v] = 0;
      }
      if (coeff != 0) out.emplace_back(rest, coeff);
    }
    return from_unsorted(std::move(out));
  }

  Scalar substitute(Var v, const Rational& val) const { return substitute(std::map<Var, Rational>{{v, val}}); }

  /// Replace a parameter by an arbitrary Laurent monomial expression, e.g. z -> c^-2 z.
  Scalar substitute(Var v, const Scalar& replacement) const {
    Scalar out;
    for (const auto& [m, q] : terms_) {
      const int e = m[v];
      Monomial rest = m;
      rest[v] = 0;
      Scalar piece = monomial(rest, q);
      if (e > 0) {
        piece *= replacement.pow(static_cast<unsigned>(e));
      } else if (e < 0) {
        if (replacement.terms_.size() != 1)
          throw NotDivisible("negative power of " + std::string(var_name(v)) + " replaced by a non-monomial");
        const auto& [rm, rq] = replacement.terms_[0];
        Monomial inv;
        for (std::size_t i = 0; i < kNumVars; ++i) inv.exp[i] = static_cast<std::int16_t>(-rm.exp[i]);
        piece *= monomial(inv, Rational(1) / rq).pow(static_cast<unsigned>(-e));
      }
      out += piece;
    }
    return out;
  }

  double evaluate(const std::map<Var, double>& bindings) const {
    double sum = 0.0;
    for (const auto& [m, q] : terms_) {
      double t = q.get_d();
      for (std::size_t i = 0; i < kNumVars; ++i) {
        if (m.exp[i] == 0) continue;
        auto it = bindings.find(static_cast<Var>(i));
        if (it == bindings.end())
          throw UnboundVariable("no value for " + std::string(var_name(static_cast<Var>(i))));
        for (int k = 0; k < std::abs(m.exp[i]); ++k) t = m.exp[i] > 0 ? t * it->second : t / it->second;
      }
      sum += t;
    }
    return sum;
  }

  /// Algebraic c -> infinity / c -> 0 limit: terms vanishing in the limit are
  /// dropped, c is erased, and surviving growing terms are an error.
  Scalar limit_c(LimitDirection dir) const {
    std::vector<Term> out;
    std::vector<Term> bad;
    for (const auto& t : terms_) {
      const int e = t.first[Var::c];
      const bool grows = dir == LimitDirection::to_infinity ? e > 0 : e < 0;
      const bool vanishes = dir == LimitDirection::to_infinity ? e < 0 : e > 0;
      if (grows) bad.push_back(t);
      else if (!vanishes) out.push_back(t);
    }
    if (!bad.empty()) {
      Scalar offending;
      offending.terms_ = bad;
      throw DivergentLimit("divergent terms " + offending.to_string());
    }
    Scalar r;
    r.terms_ = std::move(out);
    return r;
  }

  /// Exact quotient; throws NotDivisible if *this is not a multiple of d.
  Scalar exact_div(const Scalar& d) const {
    if (d.is_zero()) throw DivisionByZero("exact_div by zero");
    if (is_zero()) return {};
    if (d.terms_.size() == 1) {
      const auto& [dm, dq] = d.terms_[0];
      Scalar r = *this;
      for (auto& t : r.terms_) {
        t.first = t.first / dm;
        t.second /= dq;
      }
      return r;
    }
    // Every quotient term lies between LT(f)/LT(d) and TT(f)/TT(d).
    const Monomial lowest = trailing_term().first / d.trailing_term().first;
    Scalar rem = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
      const auto& [rm, rq] = rem.leading_term();
      Monomial qm = rm / d.leading_term().first;
      if (grlex_less(qm, lowest)) throw NotDivisible(to_string() + " / " + d.to_string());
      Rational qq = rq / d.leading_term().second;
      quot.emplace_back(qm, qq);
      rem -= d * monomial(qm, qq);
    }
    return from_unsorted(std::move(quot));
  }

  /// Positive rational c with all coefficients of *this / c coprime integers.
  Rational content() const {
    if (is_zero()) return Rational(1);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
      mpz_class n = abs(t.second.get_num());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
  }

  /// Content-free with positive leading coefficient; identifies scalar multiples.
  Scalar normalized() const {
    if (is_zero()) return {};
    Rational c = content();
    if (leading_term().second < 0) c = -c;
    return scaled(Rational(1) / c);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : terms_) {
      Rational a = abs(q);
      if (first) {
        if (q < 0) os << "-";
      } else {
        os << (q < 0 ? " - " : " + ");
      }
      first = false;
      const bool unit = a == 1;
      if (!unit || m.is_one()) os << a.get_str();
      bool need_star = !unit || m.is_one();
      for (std::size_t i = 0; i < kNumVars; ++i) {
        const int e = m.exp[i];
        if (e == 0) continue;
        if (need_star) os << "*";
        os << var_name(static_cast<Var>(i));
        if (e != 1) os << "^" << e;
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  std::vector<Term> terms_;

  static Scalar merge(const Scalar& a, const Scalar& b, bool subtract) {
    Scalar r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && grlex_less(ib->first, ia->first))) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || grlex_less(ia->first, ib->first)) {
        r.terms_.emplace_back(ib->first, subtract ? Rational(-ib->second) : ib->second);
        ++ib;
      } else {
        Rational s = subtract ? Rational(ia->second - ib->second) : Rational(ia->second + ib->second);
        if (s != 0) r.terms_.emplace_back(ia->first, s);
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  static Scalar from_unsorted(std::vector<Term> v) {
    std::sort(v.begin(), v.end(), [](const Term& x, const Term& y) { return grlex_less(y.first, x.first); });
    Scalar r;
    for (auto& t : v) {
      if (!r.terms_.empty() && r.terms_.back().first == t.first) {
        r.terms_.back().second += t.second;
        if (r.terms_.back().second == 0) r.terms_.pop_back();
      } else if (t.second != 0) {
        r.terms_.push_back(std::move(t));
      }
    }
    return r;
  }
};

inline Scalar operator*(const Rational& q, const Scalar& s) { return s.scaled(q); }

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// Shorthands used throughout.
inline Scalar Lam() { return Scalar::var(Var::Lambda); }
inline Scalar zs() { return Scalar::var(Var::z); }
inline Scalar zps() { return Scalar::var(Var::zp); }
inline Scalar cs() { return Scalar::var(Var::c); }

}  // namespace nclorentz
