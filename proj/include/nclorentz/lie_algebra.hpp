#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "nclorentz/scalar.hpp"
#include "nclorentz/wedge.hpp"

namespace nclorentz {

/// Finite-dimensional Lie algebra over the Scalar ring, given by a sparse
/// table of structure constants on an ordered basis.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> labels)
      : name_(std::move(name)), labels_(std::move(labels)), table_(labels_.size() * labels_.size(), Vec(labels_.size())) {}

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error("no generator " + label + " in " + name_);
    return static_cast<std::size_t>(it - labels_.begin());
  }
  bool has(const std::string& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
  }

  Vec e(std::size_t i) const { return Vec::basis(dim(), {i}); }
  Vec e(const std::string& label) const { return e(index_of(label)); }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vec& v) {
    table_[i * dim() + j] = v;
    table_[j * dim() + i] = -v;
  }
  void set_bracket(const std::string& a, const std::string& b, const Vec& v) {
    set_bracket(index_of(a), index_of(b), v);
  }

  const Vec& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec bracket(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    Vec r(dim());
    for (const auto& [kx, vx] : x.coeffs())
      for (const auto& [ky, vy] : y.coeffs()) r += bracket(kx[0], ky[0]).scaled(vx * vy);
    return r;
  }

  template <typename F>
  LieAlgebra map_coeffs(F&& f, std::string new_name) const {
    LieAlgebra g(std::move(new_name), labels_);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) g.table_[i * dim() + j] = bracket(i, j).map_coeffs(f);
    return g;
  }

  template <std::size_t K>
  void check(const Wedge<K>& w) const {
    if (w.dim() != dim())
      throw AlgebraMismatch("element of dimension " + std::to_string(w.dim()) + " used with " + name_);
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Vec> table_;
};

/// Adjoint action extended to the exterior algebra as a derivation.
template <std::size_t K>
Wedge<K> ad(const LieAlgebra& g, const Vec& x, const Wedge<K>& w) {
  g.check(x);
  g.check(w);
  Wedge<K> r(g.dim());
  for (const auto& [kx, vx] : x.coeffs())
    for (const auto& [kw, vw] : w.coeffs()) {
      const Scalar c = vx * vw;
      for (std::size_t slot = 0; slot < K; ++slot) {
        const Vec& br = g.bracket(kx[0], kw[slot]);
        for (const auto& [kb, vb] : br.coeffs()) {
          std::array<std::size_t, K> idx;
          for (std::size_t s = 0; s < K; ++s) idx[s] = kw[s];
          idx[slot] = kb[0];
          r.add_unsorted(idx, c * vb);
        }
      }
    }
  return r;
}

template <std::size_t K>
Wedge<K> ad(const LieAlgebra& g, std::size_t i, const Wedge<K>& w) {
  return ad(g, g.e(i), w);
}

/// Jacobi identity on basis triples; returns a description of each violation.
inline std::vector<std::string> jacobi_violations(const LieAlgebra& g) {
  std::vector<std::string> out;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = g.bracket(g.e(i), g.bracket(j, k)) + g.bracket(g.e(j), g.bracket(k, i)) +
                g.bracket(g.e(k), g.bracket(i, j));
        if (!s.is_zero())
          out.push_back("[" + g.labels()[i] + "," + g.labels()[j] + "," + g.labels()[k] + "] -> " +
                        s.to_string(g.labels()));
      }
  return out;
}

inline bool jacobi_check(const LieAlgebra& g) { return jacobi_violations(g).empty(); }

/// A subset of basis indices closed under the bracket.
struct Subalgebra {
  std::string name;
  std::vector<std::size_t> indices;

  bool contains(std::size_t i) const { return std::find(indices.begin(), indices.end(), i) != indices.end(); }
};

inline bool is_closed(const LieAlgebra& g, const std::vector<std::size_t>& idx) {
  auto in = [&](std::size_t i) { return std::find(idx.begin(), idx.end(), i) != idx.end(); };
  for (auto i : idx)
    for (auto j : idx)
      for (const auto& [k, v] : g.bracket(i, j).coeffs())
        if (!in(k[0])) return false;
  return true;
}

inline Subalgebra make_subalgebra(const LieAlgebra& g, std::string name, const std::vector<std::string>& labels) {
  Subalgebra h{std::move(name), {}};
  for (const auto& l : labels) h.indices.push_back(g.index_of(l));
  std::sort(h.indices.begin(), h.indices.end());
  if (!is_closed(g, h.indices)) throw NotClosed(h.name + " is not closed under the bracket of " + g.name());
  return h;
}

/// The subalgebra as a Lie algebra in its own right, basis in index order.
inline LieAlgebra restrict_to(const LieAlgebra& g, const Subalgebra& h) {
  std::vector<std::string> labels;
  for (auto i : h.indices) labels.push_back(g.labels()[i]);
  LieAlgebra r(h.name, labels);
  for (std::size_t a = 0; a < h.indices.size(); ++a)
    for (std::size_t b = a + 1; b < h.indices.size(); ++b) {
      Vec v(labels.size());
      for (const auto& [k, c] : g.bracket(h.indices[a], h.indices[b]).coeffs()) {
        auto pos = std::find(h.indices.begin(), h.indices.end(), k[0]) - h.indices.begin();
        v.add_sorted({static_cast<std::uint8_t>(pos)}, c);
      }
      r.set_bracket(a, b, v);
    }
  return r;
}

/// Re-express an element of the parent algebra in the basis of restrict_to(g, h).
template <std::size_t K>
Wedge<K> to_sub(const Wedge<K>& w, const Subalgebra& h) {
  Wedge<K> r(h.indices.size());
  for (const auto& [k, v] : w.coeffs()) {
    std::array<std::size_t, K> idx;
    for (std::size_t s = 0; s < K; ++s) {
      auto it = std::find(h.indices.begin(), h.indices.end(), k[s]);
      if (it == h.indices.end()) throw AlgebraMismatch("element has components outside " + h.name);
      idx[s] = static_cast<std::size_t>(it - h.indices.begin());
    }
    r.add_unsorted(idx, v);
  }
  return r;
}

template <std::size_t K>
Wedge<K> from_sub(const Wedge<K>& w, const Subalgebra& h, std::size_t parent_dim) {
  Wedge<K> r(parent_dim);
  for (const auto& [k, v] : w.coeffs()) {
    std::array<std::size_t, K> idx;
    for (std::size_t s = 0; s < K; ++s) idx[s] = h.indices.at(k[s]);
    r.add_unsorted(idx, v);
  }
  return r;
}

}  // namespace nclorentz
