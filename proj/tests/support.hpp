#pragma once

#include "latmax/latmax.hpp"

#include <random>

namespace latmax::testing {

inline IntVec3 P(Integer x, Integer y, Integer z) { return {{x, y, z}}; }
inline IntVec2 P(Integer x, Integer y) { return {{x, y}}; }
inline Rat R(long long p, long long q = 1) { return Rat(p, q); }

template <std::size_t N>
IntVec<N> random_point(std::mt19937_64& rng, Integer lo, Integer hi) {
  std::uniform_int_distribution<Integer> d(lo, hi);
  IntVec<N> v;
  for (auto& x : v.c) x = d(rng);
  return v;
}

/// Product of a few random elementary shears, swaps and sign flips, plus a
/// random translation; entries stay small.
template <std::size_t N>
AffineUnimodularMap<N> random_unimodular(std::mt19937_64& rng, int steps = 4) {
  std::uniform_int_distribution<int> axis(0, N - 1), coef(-2, 2), kind(0, 2);
  IntMatrix<N> m = identity_matrix<N>();
  for (int s = 0; s < steps; ++s) {
    IntMatrix<N> e = identity_matrix<N>();
    std::size_t i = axis(rng), j = axis(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) e[i][j] = coef(rng);
        break;
      case 1:
        std::swap(e[i], e[j]);
        break;
      default:
        e[i][i] = -1;
    }
    m = multiply(e, m);
  }
  return {m, random_point<N>(rng, -5, 5)};
}

inline IntPolytope cube(Integer s) {
  std::vector<IntVec3> pts;
  for (Integer x : {Integer{0}, s})
    for (Integer y : {Integer{0}, s})
      for (Integer z : {Integer{0}, s}) pts.push_back(P(x, y, z));
  return IntPolytope::hull(pts);
}

inline IntPolytope unit_simplex() { return IntPolytope::hull({P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)}); }

inline const CatalogEntry& catalog_entry(const std::string& name) {
  static const auto catalog = width_two_catalog();
  for (const auto& e : catalog)
    if (e.name == name) return e;
  throw std::out_of_range(name);
}

inline const RatPolygon& planar_entry(const std::string& name) {
  static const auto catalog = half_integral_catalog();
  for (const auto& e : catalog)
    if (e.name == name) return e.polygon;
  throw std::out_of_range(name);
}

/// A random tetrahedron with integer vertices in [lo, hi]^3 and nonzero volume.
inline IntPolytope random_tetrahedron(std::mt19937_64& rng, Integer lo, Integer hi) {
  for (;;) {
    std::vector<IntVec3> v;
    for (int i = 0; i < 4; ++i) v.push_back(random_point<3>(rng, lo, hi));
    if (orient3(v[0], v[1], v[2], v[3]) != 0) return IntPolytope::hull(v);
  }
}

}  // namespace latmax::testing
