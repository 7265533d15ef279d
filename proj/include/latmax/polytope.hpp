#pragma once

#include "latmax/vec.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace latmax {

/// The halfspace <normal, x> <= offset, or the hyperplane <normal, x> = offset
/// when used as an equation. Normals are primitive integer vectors.
template <class T, std::size_t N>
struct Halfspace {
  Direction<N> normal;
  T offset{};

  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

template <class T, std::size_t N>
class Polytope;

template <class T>
using Polygon = Polytope<T, 2>;
template <class T>
using Polytope3 = Polytope<T, 3>;

using IntPolygon = Polygon<Integer>;
using IntPolytope = Polytope3<Integer>;
using RatPolygon = Polygon<Rat>;
using RatPolytope = Polytope3<Rat>;

namespace detail {

template <class T, std::size_t N>
void check_magnitude(const std::vector<Vec<T, N>>& pts) {
  if constexpr (std::is_same_v<T, Integer>) {
    for (const auto& p : pts)
      for (auto x : p.c)
        if (x > kMaxCoordinate || x < -kMaxCoordinate)
          throw std::overflow_error("lattice coordinate exceeds supported magnitude");
  }
}

template <class T, std::size_t N>
Halfspace<T, N> make_halfspace(const Direction<N>& normal, const Vec<T, N>& through) {
  return {normal, dot(convert<T>(normal), through)};
}

template <class T, std::size_t N>
Direction<N> primitive_direction(const Vec<T, N>& v) {
  return primitive(v);
}

/// Counter-clockwise cycle of the strictly convex hull of sorted, distinct,
/// non-collinear 2D points (Andrew's monotone chain).
template <class T>
std::vector<std::size_t> convex_cycle_2d(const std::vector<Vec2<T>>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pts[a] < pts[b]; });
  std::vector<std::size_t> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient2(pts[h[k - 2]], pts[h[k - 1]], pts[order[i]]) <= 0) --k;
    h[k++] = order[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient2(pts[h[k - 2]], pts[h[k - 1]], pts[order[i]]) <= 0) --k;
    h[k++] = order[i];
  }
  h.resize(k - 1);
  return h;
}

template <class T>
Vec2<T> drop_axis(const Vec3<T>& p, std::size_t axis) {
  Vec2<T> r;
  std::size_t j = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != axis) r[j++] = p[i];
  return r;
}

inline std::size_t nonzero_axis(const Direction<3>& n) {
  for (std::size_t i = 0; i < 3; ++i)
    if (n[i] != 0) return i;
  throw std::logic_error("zero normal");
}

inline bool rank3(const std::vector<Direction<3>>& normals) {
  const std::size_t k = normals.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      auto ab = cross(normals[a], normals[b]);
      if (is_zero(ab)) continue;
      for (std::size_t c = b + 1; c < k; ++c)
        if (dot(ab, normals[c]) != 0) return true;
    }
  return false;
}

}  // namespace detail

/// A convex polytope given by its vertices, with a derived irredundant
/// description: `equations()` cut out the affine hull and `facets()` are the
/// relative facets within it. Vertices are kept in lexicographic order, so
/// two polytopes are equal iff their vertex lists are equal.
template <class T, std::size_t N>
class Polytope {
  static_assert(N == 2 || N == 3);

 public:
  using Scalar = T;
  using Point = Vec<T, N>;
  using Face = Halfspace<T, N>;
  static constexpr std::size_t ambient_dim = N;

  /// The empty polytope (dimension -1).
  Polytope() = default;

  static Polytope hull(std::vector<Point> points);

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<Face>& equations() const { return equations_; }
  int dim() const { return dim_; }
  bool empty() const { return dim_ < 0; }
  bool full_dimensional() const { return dim_ == static_cast<int>(N); }

  bool contains(const Point& x) const {
    if (empty()) return false;
    for (const auto& e : equations_)
      if (dot(convert<T>(e.normal), x) != e.offset) return false;
    for (const auto& f : facets_)
      if (dot(convert<T>(f.normal), x) > f.offset) return false;
    return true;
  }

  bool contains_in_relative_interior(const Point& x) const {
    if (empty()) return false;
    for (const auto& e : equations_)
      if (dot(convert<T>(e.normal), x) != e.offset) return false;
    for (const auto& f : facets_)
      if (!(dot(convert<T>(f.normal), x) < f.offset)) return false;
    return true;
  }

  bool contains(const Polytope& other) const {
    return std::all_of(other.vertices_.begin(), other.vertices_.end(),
                       [&](const Point& v) { return contains(v); });
  }

  /// Vertices lying on facet i.
  std::vector<Point> facet_vertices(std::size_t i) const {
    std::vector<Point> r;
    const auto& f = facets_.at(i);
    for (const auto& v : vertices_)
      if (dot(convert<T>(f.normal), v) == f.offset) r.push_back(v);
    return r;
  }

  /// The facet as a polytope of its own (dimension dim() - 1).
  Polytope facet(std::size_t i) const { return hull(facet_vertices(i)); }

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices_ == b.vertices_; }
  friend bool operator!=(const Polytope& a, const Polytope& b) { return !(a == b); }
  friend bool operator<(const Polytope& a, const Polytope& b) { return a.vertices_ < b.vertices_; }

 private:
  std::vector<Point> vertices_;
  std::vector<Face> facets_;
  std::vector<Face> equations_;
  int dim_ = -1;

  void finish() {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(facets_.begin(), facets_.end(),
              [](const Face& a, const Face& b) { return a.normal < b.normal; });
  }

  static Polytope point_hull(const Point& p);
  static Polytope segment_hull(const Point& a, const Point& b);
  static Polytope polygon_hull(const std::vector<Point>& pts);
  static Polytope solid_hull(const std::vector<Point>& pts);
};

template <class T, std::size_t N>
Polytope<T, N> Polytope<T, N>::point_hull(const Point& p) {
  Polytope r;
  r.dim_ = 0;
  r.vertices_ = {p};
  for (std::size_t i = 0; i < N; ++i) {
    Direction<N> e{};
    e[i] = 1;
    r.equations_.push_back(detail::make_halfspace(e, p));
  }
  return r;
}

template <class T, std::size_t N>
Polytope<T, N> Polytope<T, N>::segment_hull(const Point& a, const Point& b) {
  Polytope r;
  r.dim_ = 1;
  r.vertices_ = {a, b};
  const Direction<N> d = detail::primitive_direction(Point(b - a));
  if constexpr (N == 2) {
    r.equations_.push_back(detail::make_halfspace(Direction<2>{{-d[1], d[0]}}, a));
  } else {
    std::vector<Direction<3>> normals;
    for (std::size_t i = 0; i < 3 && normals.size() < 2; ++i) {
      auto n = primitive(cross(d, unit(i)));
      if (is_zero(n)) continue;
      if (!normals.empty() && is_zero(cross(n, normals.front()))) continue;
      normals.push_back(n);
    }
    for (const auto& n : normals) r.equations_.push_back(detail::make_halfspace(n, a));
  }
  r.facets_.push_back(detail::make_halfspace(d, b));
  r.facets_.push_back(detail::make_halfspace(Direction<N>(-d), a));
  r.finish();
  return r;
}

template <class T, std::size_t N>
Polytope<T, N> Polytope<T, N>::polygon_hull(const std::vector<Point>& pts) {
  Polytope r;
  r.dim_ = 2;
  if constexpr (N == 2) {
    auto cyc = detail::convex_cycle_2d(pts);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Point& a = pts[cyc[i]];
      const Point& b = pts[cyc[(i + 1) % cyc.size()]];
      r.vertices_.push_back(a);
      Point e = b - a;
      r.facets_.push_back(detail::make_halfspace(detail::primitive_direction(Point{{e[1], -e[0]}}), a));
    }
  } else {
    // Planar point set in 3-space; project along an axis the plane is not parallel to.
    std::size_t j = 1;
    while (j < pts.size() && pts[j] == pts[0]) ++j;
    std::size_t k = j + 1;
    Direction<3> n{};
    for (; k < pts.size(); ++k) {
      n = detail::primitive_direction(cross(Point(pts[j] - pts[0]), Point(pts[k] - pts[0])));
      if (!is_zero(n)) break;
    }
    r.equations_.push_back(detail::make_halfspace(n, pts[0]));
    const std::size_t axis = detail::nonzero_axis(n);
    std::vector<Vec2<T>> flat;
    flat.reserve(pts.size());
    for (const auto& p : pts) flat.push_back(detail::drop_axis(p, axis));
    auto cyc = detail::convex_cycle_2d(flat);
    for (auto i : cyc) r.vertices_.push_back(pts[i]);
    const Point& inner = pts[cyc[2 % cyc.size()]];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Point& a = pts[cyc[i]];
      const Point& b = pts[cyc[(i + 1) % cyc.size()]];
      Direction<3> m = primitive(cross(detail::primitive_direction(Point(b - a)), n));
      Point probe = cyc.size() > 2 ? pts[cyc[(i + 2) % cyc.size()]] : inner;
      if (dot(convert<T>(m), probe) > dot(convert<T>(m), a)) m = -m;
      r.facets_.push_back(detail::make_halfspace(m, a));
    }
  }
  r.finish();
  return r;
}

template <class T, std::size_t N>
Polytope<T, N> Polytope<T, N>::solid_hull(const std::vector<Point>& pts) {
  static_assert(N == 3);
  // pts are sorted, distinct and affinely span R^3. Incremental beneath-beyond
  // over a triangulated boundary; coplanar points count as not visible.
  std::size_t i1 = 1, i2 = 0, i3 = 0;
  for (std::size_t k = 2; k < pts.size(); ++k)
    if (!is_zero(detail::primitive_direction(cross(Point(pts[i1] - pts[0]), Point(pts[k] - pts[0]))))) {
      i2 = k;
      break;
    }
  for (std::size_t k = i2 + 1; k < pts.size(); ++k)
    if (orient3(pts[0], pts[i1], pts[i2], pts[k]) != 0) {
      i3 = k;
      break;
    }

  using Tri = std::array<std::size_t, 3>;
  std::vector<Tri> faces;
  const std::array<std::size_t, 4> simplex{0, i1, i2, i3};
  for (std::size_t skip = 0; skip < 4; ++skip) {
    Tri t;
    std::size_t w = 0;
    for (std::size_t q = 0; q < 4; ++q)
      if (q != skip) t[w++] = simplex[q];
    if (orient3(pts[t[0]], pts[t[1]], pts[t[2]], pts[simplex[skip]]) > 0) std::swap(t[1], t[2]);
    faces.push_back(t);
  }

  std::vector<std::pair<std::size_t, std::size_t>> visible_edges;
  std::vector<char> visible;
  for (std::size_t q = 0; q < pts.size(); ++q) {
    if (q == 0 || q == i1 || q == i2 || q == i3) continue;
    visible.assign(faces.size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const auto& t = faces[f];
      if (orient3(pts[t[0]], pts[t[1]], pts[t[2]], pts[q]) > 0) visible[f] = any = true;
    }
    if (!any) continue;
    visible_edges.clear();
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (visible[f])
        for (std::size_t e = 0; e < 3; ++e) visible_edges.emplace_back(faces[f][e], faces[f][(e + 1) % 3]);
    std::vector<Tri> next;
    next.reserve(faces.size() + visible_edges.size());
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (!visible[f]) next.push_back(faces[f]);
    for (const auto& [a, b] : visible_edges) {
      bool shared = std::any_of(visible_edges.begin(), visible_edges.end(),
                                [&](const auto& e) { return e.first == b && e.second == a; });
      if (!shared) next.push_back({a, b, q});
    }
    faces = std::move(next);
  }

  Polytope r;
  r.dim_ = 3;
  std::map<Direction<3>, T> planes;
  std::vector<char> used(pts.size(), 0);
  for (const auto& t : faces) {
    auto n = detail::primitive_direction(cross(Point(pts[t[1]] - pts[t[0]]), Point(pts[t[2]] - pts[t[0]])));
    planes.emplace(n, dot(convert<T>(n), pts[t[0]]));
    for (auto v : t) used[v] = 1;
  }
  for (const auto& [n, b] : planes) r.facets_.push_back({n, b});
  std::vector<Direction<3>> tight;
  for (std::size_t v = 0; v < pts.size(); ++v) {
    if (!used[v]) continue;
    tight.clear();
    for (const auto& f : r.facets_)
      if (dot(convert<T>(f.normal), pts[v]) == f.offset) tight.push_back(f.normal);
    if (detail::rank3(tight)) r.vertices_.push_back(pts[v]);
  }
  r.finish();
  return r;
}

template <class T, std::size_t N>
Polytope<T, N> Polytope<T, N>::hull(std::vector<Point> points) {
  detail::check_magnitude(points);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) return Polytope{};
  if (points.size() == 1) return point_hull(points.front());

  bool collinear = true;
  for (std::size_t k = 2; k < points.size() && collinear; ++k) {
    const Point u = points[1] - points[0], w = points[k] - points[0];
    if constexpr (N == 2)
      collinear = cross2(u, w) == T(0);
    else
      collinear = is_zero(detail::primitive_direction(cross(u, w)));
  }
  if (collinear) return segment_hull(points.front(), points.back());
  if constexpr (N == 2) {
    return polygon_hull(points);
  } else {
    const Point u = points[1] - points[0];
    std::size_t k = 2;
    while (is_zero(detail::primitive_direction(cross(u, Point(points[k] - points[0]))))) ++k;
    bool coplanar = true;
    for (std::size_t m = k + 1; m < points.size() && coplanar; ++m)
      coplanar = orient3(points[0], points[1], points[k], points[m]) == 0;
    return coplanar ? polygon_hull(points) : solid_hull(points);
  }
}

// ---------------------------------------------------------------------------
// Functionals and constructions.

/// Vertices of a polygon (or a planar polytope in 3-space) in cyclic order.
template <class T, std::size_t N>
std::vector<Vec<T, N>> cyclic_vertices(const Polytope<T, N>& p) {
  if (p.dim() != 2) throw std::invalid_argument("cyclic_vertices requires a 2-dimensional polytope");
  const auto& vs = p.vertices();
  std::vector<std::size_t> cyc;
  if constexpr (N == 2) {
    cyc = detail::convex_cycle_2d(vs);
  } else {
    const std::size_t axis = detail::nonzero_axis(p.equations().front().normal);
    std::vector<Vec2<T>> flat;
    for (const auto& v : vs) flat.push_back(detail::drop_axis(v, axis));
    cyc = detail::convex_cycle_2d(flat);
  }
  std::vector<Vec<T, N>> r;
  for (auto i : cyc) r.push_back(vs[i]);
  return r;
}

/// Area of a full-dimensional polygon or volume of a full-dimensional polytope.
template <class T, std::size_t N>
Rat volume(const Polytope<T, N>& p) {
  if (!p.full_dimensional()) throw std::invalid_argument("volume requires a full-dimensional polytope");
  if constexpr (N == 2) {
    auto cyc = cyclic_vertices(p);
    T twice{0};
    for (std::size_t i = 0; i < cyc.size(); ++i) twice += cross2(cyc[i], cyc[(i + 1) % cyc.size()]);
    return to_rat(twice) / 2;
  } else {
    const auto& apex = p.vertices().front();
    T six{0};
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
      const auto& face = p.facets()[f];
      if (dot(convert<T>(face.normal), apex) == face.offset) continue;
      auto cyc = cyclic_vertices(p.facet(f));
      for (std::size_t i = 1; i + 1 < cyc.size(); ++i) {
        T d = det3(Vec3<T>(cyc[0] - apex), Vec3<T>(cyc[i] - apex), Vec3<T>(cyc[i + 1] - apex));
        six += d < T(0) ? T(-d) : d;
      }
    }
    return to_rat(six) / 6;
  }
}

/// h(P, u) = max over P of <u, x>.
template <class T, std::size_t N>
T support(const Polytope<T, N>& p, const Direction<N>& u) {
  if (p.empty()) throw std::invalid_argument("support of an empty polytope");
  const auto cu = convert<T>(u);
  T best = dot(cu, p.vertices().front());
  for (const auto& v : p.vertices()) best = std::max(best, dot(cu, v));
  return best;
}

template <class T, std::size_t N>
T width_in_direction(const Polytope<T, N>& p, const Direction<N>& u) {
  return support(p, u) + support(p, Direction<N>(-u));
}

template <class T, std::size_t N>
Polytope<T, N> minkowski_sum(const Polytope<T, N>& a, const Polytope<T, N>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("Minkowski sum of an empty polytope");
  std::vector<Vec<T, N>> pts;
  for (const auto& v : a.vertices())
    for (const auto& w : b.vertices()) pts.push_back(v + w);
  return Polytope<T, N>::hull(std::move(pts));
}

template <class T>
Polygon<T> minkowski_sum_2d(const Polygon<T>& a, const Polygon<T>& b) {
  return minkowski_sum(a, b);
}

/// P + (-P); o-symmetric by construction.
template <class T, std::size_t N>
Polytope<T, N> difference_body(const Polytope<T, N>& p) {
  std::vector<Vec<T, N>> pts;
  for (const auto& v : p.vertices())
    for (const auto& w : p.vertices()) pts.push_back(v - w);
  return Polytope<T, N>::hull(std::move(pts));
}

template <class T, std::size_t N>
bool is_origin_symmetric(const Polytope<T, N>& p) {
  for (const auto& v : p.vertices())
    if (!std::binary_search(p.vertices().begin(), p.vertices().end(), Vec<T, N>(-v))) return false;
  return true;
}

template <class T, std::size_t N>
Polytope<T, N> translated(const Polytope<T, N>& p, const Vec<T, N>& t) {
  std::vector<Vec<T, N>> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  return Polytope<T, N>::hull(std::move(pts));
}

template <class T, std::size_t N>
Polytope<T, N> scaled(const Polytope<T, N>& p, const T& s) {
  std::vector<Vec<T, N>> pts;
  for (const auto& v : p.vertices()) pts.push_back(s * v);
  return Polytope<T, N>::hull(std::move(pts));
}

template <class T, std::size_t N>
Polytope<Rat, N> to_rational(const Polytope<T, N>& p) {
  if constexpr (std::is_same_v<T, Rat>) {
    return p;
  } else {
    std::vector<Vec<Rat, N>> pts;
    for (const auto& v : p.vertices()) pts.push_back(convert<Rat>(v));
    return Polytope<Rat, N>::hull(std::move(pts));
  }
}

template <class T, std::size_t N>
bool is_integral(const Polytope<T, N>& p) {
  return std::all_of(p.vertices().begin(), p.vertices().end(), [](const auto& v) { return is_integral(v); });
}

/// Throws std::domain_error if some vertex is not integral.
template <class T, std::size_t N>
Polytope<Integer, N> to_integral(const Polytope<T, N>& p) {
  std::vector<IntVec<N>> pts;
  for (const auto& v : p.vertices()) pts.push_back(to_integer(v));
  return Polytope<Integer, N>::hull(std::move(pts));
}

/// P ∩ {x_3 = t}, projected to the first two coordinates; empty if the plane misses P.
template <class T>
RatPolygon slice_at_height(const Polytope3<T>& p, const Rat& t) {
  if (!p.full_dimensional()) throw std::invalid_argument("slice_at_height requires a full-dimensional polytope");
  std::vector<Vec2<Rat>> pts;
  const auto& vs = p.vertices();
  for (const auto& v : vs)
    if (to_rat(v[2]) == t) pts.push_back({{to_rat(v[0]), to_rat(v[1])}});
  for (const auto& v : vs)
    for (const auto& w : vs) {
      Rat zv = to_rat(v[2]), zw = to_rat(w[2]);
      if (!(zv < t && t < zw)) continue;
      Rat s = (t - zv) / (zw - zv);
      pts.push_back({{to_rat(v[0]) + s * (to_rat(w[0]) - to_rat(v[0])),
                      to_rat(v[1]) + s * (to_rat(w[1]) - to_rat(v[1]))}});
    }
  return RatPolygon::hull(std::move(pts));
}

// ---------------------------------------------------------------------------
// Affine unimodular maps.

template <std::size_t N>
using IntMatrix = std::array<std::array<Integer, N>, N>;

template <std::size_t N>
Integer determinant(const IntMatrix<N>& m) {
  if constexpr (N == 2) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  } else {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
}

/// Adjugate, so that m * adjugate(m) = det(m) * I.
template <std::size_t N>
IntMatrix<N> adjugate(const IntMatrix<N>& m) {
  IntMatrix<N> a{};
  if constexpr (N == 2) {
    a[0][0] = m[1][1];
    a[0][1] = -m[0][1];
    a[1][0] = -m[1][0];
    a[1][1] = m[0][0];
  } else {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
      }
  }
  return a;
}

template <std::size_t N>
IntMatrix<N> multiply(const IntMatrix<N>& a, const IntMatrix<N>& b) {
  IntMatrix<N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

template <std::size_t N>
IntMatrix<N> identity_matrix() {
  IntMatrix<N> m{};
  for (std::size_t i = 0; i < N; ++i) m[i][i] = 1;
  return m;
}

/// x ↦ matrix·x + translation with |det(matrix)| = 1; maps Z^N onto itself.
template <std::size_t N>
class AffineUnimodularMap {
 public:
  AffineUnimodularMap() : matrix_(identity_matrix<N>()) {}
  AffineUnimodularMap(const IntMatrix<N>& matrix, const IntVec<N>& translation)
      : matrix_(matrix), translation_(translation) {
    const Integer d = determinant(matrix_);
    if (d != 1 && d != -1) throw std::invalid_argument("affine map is not unimodular (|det| != 1)");
  }

  static AffineUnimodularMap translation(const IntVec<N>& t) { return {identity_matrix<N>(), t}; }

  const IntMatrix<N>& matrix() const { return matrix_; }
  const IntVec<N>& translation() const { return translation_; }
  Integer det() const { return determinant(matrix_); }

  template <class T>
  Vec<T, N> operator()(const Vec<T, N>& x) const {
    Vec<T, N> r;
    for (std::size_t i = 0; i < N; ++i) {
      T s = T(translation_[i]);
      for (std::size_t j = 0; j < N; ++j) s += T(matrix_[i][j]) * x[j];
      r[i] = s;
    }
    return r;
  }

  /// (this ∘ other)(x) = this(other(x)).
  AffineUnimodularMap compose(const AffineUnimodularMap& other) const {
    return {multiply(matrix_, other.matrix_), (*this)(other.translation_)};
  }

  AffineUnimodularMap inverse() const {
    IntMatrix<N> inv = adjugate(matrix_);
    const Integer d = det();
    for (auto& row : inv)
      for (auto& x : row) x *= d;
    AffineUnimodularMap lin(inv, IntVec<N>{});
    return {inv, -lin(translation_)};
  }

  friend bool operator==(const AffineUnimodularMap& a, const AffineUnimodularMap& b) {
    return a.matrix_ == b.matrix_ && a.translation_ == b.translation_;
  }

 private:
  IntMatrix<N> matrix_;
  IntVec<N> translation_{};
};

template <class T, std::size_t N>
Polytope<T, N> apply_map(const AffineUnimodularMap<N>& phi, const Polytope<T, N>& p) {
  std::vector<Vec<T, N>> pts;
  for (const auto& v : p.vertices()) pts.push_back(phi(v));
  return Polytope<T, N>::hull(std::move(pts));
}

}  // namespace latmax
