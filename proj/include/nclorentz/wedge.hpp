#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nclorentz/scalar.hpp"

namespace nclorentz {

/// Element of the k-th exterior power of an n-dimensional algebra, stored on
/// strictly increasing index tuples. e_i ^ e_j = e_i (x) e_j - e_j (x) e_i.
template <std::size_t K>
class Wedge {
 public:
  using Key = std::array<std::uint8_t, K>;

  Wedge() = default;
  explicit Wedge(std::size_t dim) : dim_(dim) {}

  /// Basis element e_i1 ^ ... ^ e_ik for arbitrary (not necessarily sorted) indices.
  static Wedge basis(std::size_t dim, const std::array<std::size_t, K>& idx, const Scalar& coeff = Scalar(1L)) {
    Wedge w(dim);
    w.add_unsorted(idx, coeff);
    return w;
  }

  std::size_t dim() const { return dim_; }
  const std::map<Key, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coeff(const Key& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Scalar() : it->second;
  }

  /// Accumulate coeff * e_idx[0] ^ ... with sign normalization; repeated indices vanish.
  void add_unsorted(std::array<std::size_t, K> idx, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    int sign = 1;
    for (std::size_t i = 0; i < K; ++i)
      for (std::size_t j = 0; j + 1 < K - i; ++j)
        if (idx[j] > idx[j + 1]) {
          std::swap(idx[j], idx[j + 1]);
          sign = -sign;
        }
    for (std::size_t i = 0; i + 1 < K; ++i)
      if (idx[i] == idx[i + 1]) return;
    Key key;
    for (std::size_t i = 0; i < K; ++i) key[i] = static_cast<std::uint8_t>(idx[i]);
    add_sorted(key, sign > 0 ? coeff : -coeff);
  }

  void add_sorted(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  Wedge& operator+=(const Wedge& o) {
    check_dim(o);
    for (const auto& [k, v] : o.coeffs_) add_sorted(k, v);
    return *this;
  }
  Wedge& operator-=(const Wedge& o) {
    check_dim(o);
    for (const auto& [k, v] : o.coeffs_) add_sorted(k, -v);
    return *this;
  }
  friend Wedge operator+(Wedge a, const Wedge& b) { return a += b; }
  friend Wedge operator-(Wedge a, const Wedge& b) { return a -= b; }
  Wedge operator-() const { return scaled(Scalar(-1L)); }

  Wedge scaled(const Scalar& s) const {
    Wedge r(dim_);
    if (s.is_zero()) return r;
    for (const auto& [k, v] : coeffs_) r.add_sorted(k, v * s);
    return r;
  }
  friend Wedge operator*(const Scalar& s, const Wedge& w) { return w.scaled(s); }

  friend bool operator==(const Wedge& a, const Wedge& b) { return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_; }

  /// Apply f to every coefficient (substitution, limits, ...).
  template <typename F>
  Wedge map_coeffs(F&& f) const {
    Wedge r(dim_);
    for (const auto& [k, v] : coeffs_) r.add_sorted(k, f(v));
    return r;
  }

  std::string to_string(const std::vector<std::string>& labels) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : coeffs_) {
      if (!first) out += " + ";
      first = false;
      out += "(" + v.to_string() + ")";
      for (std::size_t i = 0; i < K; ++i) out += (i == 0 ? " " : "^") + labels.at(k[i]);
    }
    return out;
  }

  void check_dim(const Wedge& o) const {
    if (dim_ != o.dim_) throw AlgebraMismatch("wedge elements over algebras of different dimension");
  }

 private:
  std::size_t dim_ = 0;
  std::map<Key, Scalar> coeffs_;
};

using Vec = Wedge<1>;
using Bivector = Wedge<2>;
using Trivector = Wedge<3>;

template <std::size_t A, std::size_t B>
Wedge<A + B> wedge(const Wedge<A>& a, const Wedge<B>& b) {
  a.check_dim(Wedge<A>(b.dim()));
  Wedge<A + B> r(a.dim());
  for (const auto& [ka, va] : a.coeffs())
    for (const auto& [kb, vb] : b.coeffs()) {
      std::array<std::size_t, A + B> idx;
      for (std::size_t i = 0; i < A; ++i) idx[i] = ka[i];
      for (std::size_t i = 0; i < B; ++i) idx[A + i] = kb[i];
      r.add_unsorted(idx, va * vb);
    }
  return r;
}

/// All strictly increasing K-tuples of {0..n-1}, lexicographic.
template <std::size_t K>
std::vector<typename Wedge<K>::Key> wedge_slots(std::size_t n) {
  std::vector<typename Wedge<K>::Key> out;
  typename Wedge<K>::Key cur{};
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == K) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur[pos] = static_cast<std::uint8_t>(i);
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace nclorentz
