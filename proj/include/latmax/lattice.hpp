#pragma once

// Lattice functionals on exact polytopes. Every query reduces to scanning the
// integer points of a system <n, y> <= c with integral n and c, row by row.

#include "latmax/polytope.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace latmax {

/// Integer points y with <normal, y> <= offset for every constraint, inside [lo, hi].
template <std::size_t N>
struct LatticeRegion {
  std::vector<Halfspace<Integer, N>> constraints;
  IntVec<N> lo{}, hi{};
  bool empty = false;
};

enum class Closure { closed, relative_interior };

/// The points y ∈ Z^N with scale·y in P (Closure::closed) or in the relative
/// interior of P. `scale` lets half-integral callers work on the lattice 2Z^N.
template <class T, std::size_t N>
LatticeRegion<N> lattice_region(const Polytope<T, N>& p, Closure closure, Integer scale = 1) {
  LatticeRegion<N> r;
  if (p.empty()) {
    r.empty = true;
    return r;
  }
  for (std::size_t i = 0; i < N; ++i) {
    T lo = p.vertices().front()[i], hi = lo;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    r.lo[i] = -floor_over(T(-lo), scale);
    r.hi[i] = floor_over(hi, scale);
    if (r.lo[i] > r.hi[i]) r.empty = true;
  }
  for (const auto& e : p.equations()) {
    r.constraints.push_back({e.normal, floor_over(e.offset, scale)});
    r.constraints.push_back({Direction<N>(-e.normal), floor_over(T(-e.offset), scale)});
  }
  for (const auto& f : p.facets()) {
    Integer bound = closure == Closure::closed ? floor_over(f.offset, scale)
                                               : -floor_over(T(-f.offset), scale) - 1;
    r.constraints.push_back({f.normal, bound});
  }
  return r;
}

/// Calls f(y) for each point of the region, x_N-major then x_{N-1}, ...; stops
/// early when f returns false. Returns false iff stopped early.
template <std::size_t N, class F>
bool for_each_lattice_point(const LatticeRegion<N>& r, F&& f) {
  if (r.empty) return true;
  IntVec<N> y = r.lo;
  auto row = [&]() -> bool {
    Integer lo = r.lo[0], hi = r.hi[0];
    for (const auto& c : r.constraints) {
      Integer rest = c.offset;
      for (std::size_t i = 1; i < N; ++i) rest -= c.normal[i] * y[i];
      const Integer a = c.normal[0];
      if (a > 0)
        hi = std::min(hi, floor_div(rest, a));
      else if (a < 0)
        lo = std::max(lo, ceil_div(rest, a));
      else if (rest < 0)
        return true;
      if (lo > hi) return true;
    }
    for (y[0] = lo; y[0] <= hi; ++y[0])
      if (!f(static_cast<const IntVec<N>&>(y))) return false;
    return true;
  };
  if constexpr (N == 2) {
    for (y[1] = r.lo[1]; y[1] <= r.hi[1]; ++y[1])
      if (!row()) return false;
  } else {
    for (y[2] = r.lo[2]; y[2] <= r.hi[2]; ++y[2])
      for (y[1] = r.lo[1]; y[1] <= r.hi[1]; ++y[1])
        if (!row()) return false;
  }
  return true;
}

template <std::size_t N>
std::vector<IntVec<N>> collect_points(const LatticeRegion<N>& r) {
  std::vector<IntVec<N>> pts;
  for_each_lattice_point(r, [&](const IntVec<N>& y) {
    pts.push_back(y);
    return true;
  });
  std::sort(pts.begin(), pts.end());
  return pts;
}

/// P ∩ Z^N in lexicographic order.
template <class T, std::size_t N>
std::vector<IntVec<N>> integer_points(const Polytope<T, N>& p) {
  return collect_points(lattice_region(p, Closure::closed));
}

template <class T, std::size_t N>
std::optional<IntVec<N>> relative_interior_lattice_point(const Polytope<T, N>& p, Integer scale = 1) {
  std::optional<IntVec<N>> hit;
  for_each_lattice_point(lattice_region(p, Closure::relative_interior, scale), [&](const IntVec<N>& y) {
    hit = y;
    return false;
  });
  return hit;
}

/// An integer point in the interior of a full-dimensional P, if any.
template <class T, std::size_t N>
std::optional<IntVec<N>> interior_lattice_point(const Polytope<T, N>& p, Integer scale = 1) {
  if (!p.full_dimensional()) throw std::invalid_argument("lattice-freeness requires a full-dimensional polytope");
  return relative_interior_lattice_point(p, scale);
}

template <class T, std::size_t N>
bool is_lattice_free(const Polytope<T, N>& p, Integer scale = 1) {
  return !interior_lattice_point(p, scale).has_value();
}

template <std::size_t N>
struct LatticeDiameterWitness {
  IntVec<N> z{}, z_prime{};
  Integer value = 0;
};

/// max over z, z' ∈ P ∩ Z^N of gcd(z - z'); 0 when P has at most one integer point.
template <std::size_t N>
LatticeDiameterWitness<N> lattice_diameter_of_points(std::span<const IntVec<N>> pts) {
  LatticeDiameterWitness<N> w;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Integer g = content(IntVec<N>(pts[j] - pts[i]));
      if (g > w.value) w = {pts[i], pts[j], g};
    }
  return w;
}

template <class T, std::size_t N>
LatticeDiameterWitness<N> lattice_diameter_witness(const Polytope<T, N>& p) {
  auto pts = integer_points(p);
  return lattice_diameter_of_points<N>(pts);
}

template <class T, std::size_t N>
Integer lattice_diameter(const Polytope<T, N>& p) {
  return lattice_diameter_witness(p).value;
}

/// A nonzero integer point of (1/4)·C, i.e. a witness for λ₁(C) <= 1/4.
template <class T, std::size_t N>
std::optional<IntVec<N>> quarter_body_lattice_point(const Polytope<T, N>& c) {
  if (!c.full_dimensional() || !is_origin_symmetric(c))
    throw std::invalid_argument("first-minimum test requires a full-dimensional o-symmetric body");
  std::optional<IntVec<N>> hit;
  for_each_lattice_point(lattice_region(c, Closure::closed, 4), [&](const IntVec<N>& y) {
    if (is_zero(y)) return true;
    hit = y;
    return false;
  });
  return hit;
}

/// λ₁(C) > 1/4 for an o-symmetric body C.
template <class T, std::size_t N>
bool first_minimum_exceeds_quarter(const Polytope<T, N>& c) {
  return !quarter_body_lattice_point(c).has_value();
}

// ---------------------------------------------------------------------------
// Lattice width.

/// The finite direction set that decides lw >= 3 for bodies containing
/// o, e1, e2 and the integral point a = (a1, a2, h), h >= 1.
inline std::vector<Direction<3>> width_test_directions(const IntVec3& apex) {
  const Integer h = apex[2];
  if (h < 1) throw std::invalid_argument("apex height must be positive");
  std::vector<Direction<3>> dirs;
  for (Integer v1 = -2; v1 <= 2; ++v1)
    for (Integer v2 = -2; v2 <= 2; ++v2) {
      if (std::abs(v1 - v2) > 2) continue;
      const Integer base = v1 * apex[0] + v2 * apex[1];
      for (Integer v3 = ceil_div(-2 - base, h); v3 <= floor_div(2 - base, h); ++v3)
        if (v1 != 0 || v2 != 0 || v3 != 0) dirs.push_back({{v1, v2, v3}});
    }
  return dirs;
}

inline bool widths_at_least_three(std::span<const IntVec3> points, std::span<const Direction<3>> dirs) {
  for (const auto& d : dirs) {
    Integer lo = dot(d, points.front()), hi = lo;
    for (const auto& p : points) {
      const Integer s = dot(d, p);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    if (hi - lo < 3) return false;
  }
  return true;
}

/// lw(P) >= 3, decided over the finite direction set of width_test_directions.
/// Throws if P does not contain o, e1, e2 and the apex.
inline bool has_lattice_width_at_least_three(const IntPolytope& p, const IntVec3& apex) {
  for (const IntVec3& q : {IntVec3{}, unit(0), unit(1), apex})
    if (!p.contains(q)) throw std::invalid_argument("width test requires o, e1, e2 and the apex inside P");
  auto dirs = width_test_directions(apex);
  return widths_at_least_three(p.vertices(), dirs);
}

template <std::size_t N>
struct WidthCertificate {
  Direction<N> direction{};
  Rat width;
};

/// Primitive directions with ∞-norm <= radius and first nonzero coordinate
/// positive, ordered by 1-norm and then lexicographically descending.
template <std::size_t N>
std::vector<Direction<N>> primitive_directions(Integer radius) {
  std::vector<Direction<N>> dirs;
  Direction<N> d;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == N) {
      if (content(d) != 1) return;
      for (std::size_t k = 0; k < N; ++k)
        if (d[k] != 0) {
          if (d[k] > 0) dirs.push_back(d);
          return;
        }
      return;
    }
    for (Integer x = -radius; x <= radius; ++x) {
      d[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  auto l1 = [](const Direction<N>& v) {
    Integer s = 0;
    for (auto x : v.c) s += std::abs(x);
    return s;
  };
  std::stable_sort(dirs.begin(), dirs.end(), [&](const auto& a, const auto& b) {
    if (l1(a) != l1(b)) return l1(a) < l1(b);
    return b < a;
  });
  return dirs;
}

/// Smallest width over primitive directions of ∞-norm <= radius: an upper
/// bound on the lattice width, together with the direction attaining it.
template <class T, std::size_t N>
WidthCertificate<N> lattice_width_heuristic(const Polytope<T, N>& p, Integer radius = 5) {
  if (radius < 1) throw std::invalid_argument("radius must be positive");
  if (p.empty()) throw std::invalid_argument("lattice width of an empty polytope");
  std::optional<WidthCertificate<N>> best;
  for (const auto& d : primitive_directions<N>(radius)) {
    Rat w = to_rat(width_in_direction(p, d));
    if (!best || w < best->width) best = WidthCertificate<N>{d, w};
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Blocked facets.

/// An integer point in the relative interior of facet i, if one exists.
template <class T, std::size_t N>
std::optional<IntVec<N>> facet_blocking_point(const Polytope<T, N>& p, std::size_t facet, Integer scale = 1) {
  if (!p.full_dimensional()) throw std::invalid_argument("facets are only defined for full-dimensional polytopes");
  return relative_interior_lattice_point(p.facet(facet), scale);
}

template <class T, std::size_t N>
bool facet_blocked(const Polytope<T, N>& p, std::size_t facet) {
  return facet_blocking_point(p, facet).has_value();
}

/// The shear x ↦ (x1 - k·x3, x2 - k'·x3, x3) bringing a = (a1, a2, h) to
/// (a1 mod h, a2 mod h, h).
inline std::pair<AffineUnimodularMap<3>, IntVec3> normalize_apex(const IntVec3& a) {
  const Integer h = a[2];
  if (h <= 0) throw std::invalid_argument("apex height must be positive");
  const Integer k1 = floor_div(a[0], h), k2 = floor_div(a[1], h);
  IntMatrix<3> m = identity_matrix<3>();
  m[0][2] = -k1;
  m[1][2] = -k2;
  AffineUnimodularMap<3> phi(m, IntVec3{});
  return {phi, phi(a)};
}

}  // namespace latmax
