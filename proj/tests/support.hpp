#pragma once

#include <random>
#include <vector>

#include "nclorentz/scalar.hpp"
#include "nclorentz/wedge.hpp"

namespace testsupport {

using namespace nclorentz;

/// Small random Laurent polynomial in Lambda, z, zp, c.
inline Scalar random_scalar(std::mt19937& rng, int terms = 3) {
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), ex(-2, 2), pick(0, 3);
  static const Var vars[] = {Var::Lambda, Var::z, Var::zp, Var::c};
  Scalar s;
  for (int t = 0; t < terms; ++t) {
    Scalar m(make_rational(coef(rng), den(rng)));
    for (int k = 0; k < 2; ++k) {
      const int e = ex(rng);
      if (e != 0) m *= Scalar::var(vars[pick(rng)], e);
    }
    s += m;
  }
  return s;
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return make_rational(num(rng), den(rng));
}

template <std::size_t K>
Wedge<K> random_wedge(std::mt19937& rng, std::size_t dim, int entries, bool symbolic = false) {
  std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
  Wedge<K> w(dim);
  for (int e = 0; e < entries; ++e) {
    std::array<std::size_t, K> key;
    for (auto& k : key) k = idx(rng);
    w.add_unsorted(key, symbolic ? random_scalar(rng, 2) : Scalar(random_rational(rng)));
  }
  return w;
}

}  // namespace testsupport
