#pragma once

// Matrix representations with Scalar entries, one matrix per basis generator.

#include <string>
#include <vector>

#include "nclorentz/lie_algebra.hpp"

namespace nclorentz {

struct Representation {
  std::size_t size = 0;
  /// mats[i][row * size + col] is the (row, col) entry of rho(e_i).
  std::vector<std::vector<Scalar>> mats;

  Scalar& at(std::size_t gen, std::size_t r, std::size_t c) { return mats[gen][r * size + c]; }
  const Scalar& at(std::size_t gen, std::size_t r, std::size_t c) const { return mats[gen][r * size + c]; }

  template <typename F>
  Representation map_entries(F&& f) const {
    Representation out = *this;
    for (auto& m : out.mats)
      for (auto& e : m) e = f(e);
    return out;
  }
};

/// 5x5 representation of g_Lambda on (s4, s0, s1, s2, s3).
inline Representation rho_g_lambda() {
  Representation rho{5, std::vector<std::vector<Scalar>>(10, std::vector<Scalar>(25))};
  rho.at(0, 0, 1) = Lam();
  rho.at(0, 1, 0) = Scalar(1L);
  for (std::size_t a = 1; a <= 3; ++a) {
    rho.at(a, 0, a + 1) = -Lam();
    rho.at(a, a + 1, 0) = Scalar(1L);
    rho.at(3 + a, 1, a + 1) = Scalar(1L);
    rho.at(3 + a, a + 1, 1) = Scalar(1L);
  }
  // rotations: J1 on (s2, s3), J2 on (s3, s1), J3 on (s1, s2)
  rho.at(7, 3, 4) = Scalar(-1L);
  rho.at(7, 4, 3) = Scalar(1L);
  rho.at(8, 2, 4) = Scalar(1L);
  rho.at(8, 4, 2) = Scalar(-1L);
  rho.at(9, 2, 3) = Scalar(-1L);
  rho.at(9, 3, 2) = Scalar(1L);
  return rho;
}

/// Exact check that [rho(e_i), rho(e_j)] = rho([e_i, e_j]) for all basis pairs.
inline std::vector<std::string> representation_violations(const LieAlgebra& g, const Representation& rho) {
  std::vector<std::string> bad;
  const std::size_t n = rho.size;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          Scalar lhs;
          for (std::size_t k = 0; k < n; ++k)
            lhs += rho.at(i, r, k) * rho.at(j, k, c) - rho.at(j, r, k) * rho.at(i, k, c);
          Scalar rhs;
          for (const auto& [key, v] : g.bracket(i, j).coeffs()) rhs += v * rho.at(key[0], r, c);
          if (!(lhs == rhs)) {
            bad.push_back(g.labels()[i] + "," + g.labels()[j]);
            r = c = n;
          }
        }
    }
  return bad;
}

}  // namespace nclorentz
