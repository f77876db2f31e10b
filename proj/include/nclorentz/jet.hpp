#pragma once

// Forward-mode dual numbers with N first-order partials, and the
// Lambda-analytic trigonometric kernels C_Lambda, S_Lambda.

#include <array>
#include <cmath>
#include <utility>

namespace nclorentz {

template <int N>
struct Jet {
  double v = 0.0;
  std::array<double, N> d{};

  Jet() = default;
  Jet(double value) : v(value) {}  // NOLINT(google-explicit-constructor)

  static Jet variable(double value, int slot) {
    Jet j(value);
    j.d[slot] = 1.0;
    return j;
  }

  Jet& operator+=(const Jet& o) {
    v += o.v;
    for (int i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    v -= o.v;
    for (int i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    for (int i = 0; i < N; ++i) d[i] = d[i] * o.v + v * o.d[i];
    v *= o.v;
    return *this;
  }
  Jet& operator/=(const Jet& o) {
    const double inv = 1.0 / o.v;
    for (int i = 0; i < N; ++i) d[i] = (d[i] - v * inv * o.d[i]) * inv;
    v *= inv;
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  Jet operator-() const {
    Jet r = *this;
    r.v = -r.v;
    for (auto& x : r.d) x = -x;
    return r;
  }
};

inline double value_of(double x) { return x; }
template <int N>
double value_of(const Jet<N>& x) {
  return x.v;
}

/// C_L(x) = sum L^k x^{2k}/(2k)!, S_L(x) = sum L^k x^{2k+1}/(2k+1)!: cos/sin(eta x)
/// with eta^2 = -L for L < 0, cosh/sinh for L > 0, (1, x) for L = 0.
inline std::pair<double, double> lambda_trig(double lambda, double x) {
  if (lambda < 0) {
    const double e = std::sqrt(-lambda);
    return {std::cos(e * x), std::sin(e * x) / e};
  }
  if (lambda > 0) {
    const double e = std::sqrt(lambda);
    return {std::cosh(e * x), std::sinh(e * x) / e};
  }
  return {1.0, x};
}

/// Same kernels with derivatives: C' = L S, S' = C.
template <int N>
std::pair<Jet<N>, Jet<N>> lambda_trig(double lambda, const Jet<N>& x) {
  const auto [c, s] = lambda_trig(lambda, x.v);
  Jet<N> C(c), S(s);
  for (int i = 0; i < N; ++i) {
    C.d[i] = lambda * s * x.d[i];
    S.d[i] = c * x.d[i];
  }
  return {C, S};
}

/// Power-series evaluation of the kernels, summed until terms underflow.
inline std::pair<double, double> lambda_trig_series(double lambda, double x) {
  double c = 0.0, s = 0.0, tc = 1.0, ts = x;
  for (int k = 0; k < 200; ++k) {
    c += tc;
    s += ts;
    tc *= lambda * x * x / ((2.0 * k + 1) * (2.0 * k + 2));
    ts *= lambda * x * x / ((2.0 * k + 2) * (2.0 * k + 3));
    if (std::abs(tc) < 1e-18 * std::abs(c) && std::abs(ts) < 1e-18 * (std::abs(s) + 1e-300)) break;
  }
  return {c, s};
}

}  // namespace nclorentz
