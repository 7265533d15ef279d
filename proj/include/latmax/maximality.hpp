#pragma once

#include "latmax/lattice.hpp"

#include <optional>
#include <stdexcept>

namespace latmax {

/// A lattice-free polytope is R^N-maximal iff every facet is blocked, i.e.
/// has an integer point in its relative interior.
template <class T, std::size_t N>
bool is_r_maximal(const Polytope<T, N>& p, Integer scale = 1) {
  if (!p.full_dimensional() || !is_lattice_free(p, scale))
    throw std::invalid_argument("R-maximality is only defined here for full-dimensional lattice-free polytopes");
  for (std::size_t f = 0; f < p.facets().size(); ++f)
    if (!facet_blocking_point(p, f, scale)) return false;
  return true;
}

template <class T>
bool is_r_maximal_2d(const Polygon<T>& q) {
  return is_r_maximal(q);
}

/// First integer point p ∉ P (lexicographic order) in P's integer bounding
/// box inflated by `margin` such that conv(P ∪ {p}) is still lattice-free.
/// Such a p proves P is not Z^N-maximal; finding none is inconclusive.
template <class T, std::size_t N>
std::optional<IntVec<N>> z_nonmaximality_certificate(const Polytope<T, N>& p, Integer margin, Integer scale = 1) {
  if (margin < 1) throw std::invalid_argument("certificate margin must be at least 1");
  if (!p.full_dimensional()) throw std::invalid_argument("certificate search requires a full-dimensional polytope");
  IntVec<N> lo, hi;
  for (std::size_t i = 0; i < N; ++i) {
    T a = p.vertices().front()[i], b = a;
    for (const auto& v : p.vertices()) {
      a = std::min(a, v[i]);
      b = std::max(b, v[i]);
    }
    lo[i] = -floor_over(T(-a), scale) - margin;
    hi[i] = floor_over(b, scale) + margin;
  }
  std::vector<Vec<T, N>> pts = p.vertices();
  pts.push_back({});
  IntVec<N> y = lo;
  std::optional<IntVec<N>> found;
  auto visit = [&]() {
    Vec<T, N> q;
    for (std::size_t i = 0; i < N; ++i) q[i] = T(y[i] * scale);
    if (p.contains(q)) return false;
    pts.back() = q;
    if (!is_lattice_free(Polytope<T, N>::hull(pts), scale)) return false;
    found = y;
    return true;
  };
  if constexpr (N == 2) {
    for (y[0] = lo[0]; y[0] <= hi[0]; ++y[0])
      for (y[1] = lo[1]; y[1] <= hi[1]; ++y[1])
        if (visit()) return found;
  } else {
    for (y[0] = lo[0]; y[0] <= hi[0]; ++y[0])
      for (y[1] = lo[1]; y[1] <= hi[1]; ++y[1])
        for (y[2] = lo[2]; y[2] <= hi[2]; ++y[2])
          if (visit()) return found;
  }
  return std::nullopt;
}

template <std::size_t N>
struct MaximalityVerdict {
  bool r_maximal = false;
  std::optional<IntVec<N>> z_certificate;
  Integer window_used = 0;
};

template <class T, std::size_t N>
MaximalityVerdict<N> assess(const Polytope<T, N>& p, Integer margin) {
  MaximalityVerdict<N> v;
  v.r_maximal = is_r_maximal(p);
  v.z_certificate = z_nonmaximality_certificate(p, margin);
  v.window_used = margin;
  return v;
}

}  // namespace latmax
