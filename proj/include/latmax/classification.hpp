#pragma once

// Stored catalogs of maximal lattice-free polygons and width-two polytopes,
// unimodular equivalence testing, and the brute-force planar classification.

#include "latmax/maximality.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace latmax {

// ---------------------------------------------------------------------------
// Unimodular equivalence.

namespace detail {

/// Indices of N + 1 affinely independent vertices of a full-dimensional polytope.
template <std::size_t N>
std::array<std::size_t, N + 1> affine_frame(const std::vector<IntVec<N>>& vs) {
  std::array<std::size_t, N + 1> idx{};
  const std::size_t n = vs.size();
  if constexpr (N == 2) {
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (cross2(IntVec2(vs[i] - vs[0]), IntVec2(vs[j] - vs[0])) != 0) return {0, i, j};
  } else {
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (orient3(vs[0], vs[i], vs[j], vs[k]) != 0) return {0, i, j, k};
  }
  throw std::invalid_argument("polytope has no affinely independent vertex frame");
  return idx;
}

template <std::size_t N>
IntMatrix<N> frame_matrix(const std::vector<IntVec<N>>& vs, const std::array<std::size_t, N + 1>& idx) {
  IntMatrix<N> m{};
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t r = 0; r < N; ++r) m[r][c] = vs[idx[c + 1]][r] - vs[idx[0]][r];
  return m;
}

}  // namespace detail

/// An affine unimodular map φ with φ(A) = B, if one exists. A frame of
/// affinely independent vertices of A is sent to every ordered tuple of
/// vertices of B; a candidate is accepted iff it is integral, has |det| = 1,
/// its translation is divisible by `translation_modulus`, and it maps the
/// vertex set of A onto that of B.
template <std::size_t N>
std::optional<AffineUnimodularMap<N>> unimodular_equivalent(const Polytope<Integer, N>& a,
                                                            const Polytope<Integer, N>& b,
                                                            Integer translation_modulus = 1) {
  if (!a.full_dimensional() || !b.full_dimensional())
    throw std::invalid_argument("equivalence test requires full-dimensional polytopes");
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  if (va.size() != vb.size() || a.facets().size() != b.facets().size() || volume(a) != volume(b))
    return std::nullopt;

  const auto frame = detail::affine_frame<N>(va);
  const IntMatrix<N> da = detail::frame_matrix<N>(va, frame);
  const Integer det_a = determinant(da);
  const IntMatrix<N> adj = adjugate(da);
  const std::size_t n = vb.size();

  std::array<std::size_t, N + 1> pick{};
  std::vector<IntVec<N>> image(va.size());
  std::optional<AffineUnimodularMap<N>> found;
  auto attempt = [&]() -> bool {
    const IntMatrix<N> db = detail::frame_matrix<N>(vb, pick);
    const Integer det_b = determinant(db);
    if (det_b != det_a && det_b != -det_a) return false;
    IntMatrix<N> m = multiply(db, adj);
    for (auto& row : m)
      for (auto& x : row) {
        if (x % det_a != 0) return false;
        x /= det_a;
      }
    IntVec<N> t = vb[pick[0]];
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) t[r] -= m[r][c] * va[frame[0]][c];
    for (auto x : t.c)
      if (x % translation_modulus != 0) return false;
    AffineUnimodularMap<N> phi(m, t);
    for (std::size_t i = 0; i < va.size(); ++i) image[i] = phi(va[i]);
    std::sort(image.begin(), image.end());
    if (image != vb) return false;
    found = phi;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == N + 1) return attempt();
    for (std::size_t i = 0; i < n; ++i) {
      bool used = false;
      for (std::size_t d = 0; d < depth; ++d) used = used || pick[d] == i;
      if (used) continue;
      pick[depth] = i;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

/// 2·P for a polygon whose vertices lie in (1/2)Z^2.
inline IntPolygon doubled(const RatPolygon& p) {
  std::vector<IntVec2> pts;
  for (const auto& v : p.vertices()) pts.push_back(to_integer(Vec2<Rat>(Rat(2) * v)));
  return IntPolygon::hull(std::move(pts));
}

inline bool is_half_integral(const RatPolygon& p) {
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [](const auto& v) { return is_integral(Vec2<Rat>(Rat(2) * v)); });
}

/// Equivalence of half-integral polygons under maps preserving Z^2: the
/// doubled polygons must be related by a unimodular matrix and an even translation.
inline std::optional<AffineUnimodularMap<2>> unimodular_equivalent_half_integral(const RatPolygon& a,
                                                                                 const RatPolygon& b) {
  if (!is_half_integral(a) || !is_half_integral(b))
    throw std::invalid_argument("polygons must have half-integral vertices");
  auto phi = unimodular_equivalent(doubled(a), doubled(b), 2);
  if (!phi) return std::nullopt;
  IntVec2 t = phi->translation();
  for (auto& x : t.c) x /= 2;
  return AffineUnimodularMap<2>(phi->matrix(), t);
}

template <std::size_t N>
struct EquivalenceClass {
  Polytope<Integer, N> representative;  ///< lexicographically smallest vertex list in the class
  std::size_t representative_index = 0;
  std::vector<std::size_t> members;     ///< indices into the input list
};

/// Partitions full-dimensional integral polytopes into unimodular
/// equivalence classes. Classes are ordered by representative.
template <std::size_t N>
std::vector<EquivalenceClass<N>> dedup_classes(const std::vector<Polytope<Integer, N>>& polys) {
  using Key = std::tuple<Rat, std::size_t, std::size_t, std::size_t, Integer>;
  auto invariants = [](const Polytope<Integer, N>& p) -> Key {
    return {volume(p), p.vertices().size(), p.facets().size(), integer_points(p).size(), lattice_diameter(p)};
  };
  std::vector<EquivalenceClass<N>> classes;
  std::vector<Key> keys;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const Key key = invariants(polys[i]);
    bool placed = false;
    for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
      if (keys[c] != key) continue;
      if (unimodular_equivalent(classes[c].representative, polys[i])) {
        classes[c].members.push_back(i);
        placed = true;
      }
    }
    if (!placed) {
      classes.push_back({polys[i], i, {i}});
      keys.push_back(key);
    }
  }
  for (auto& c : classes)
    for (auto m : c.members)
      if (polys[m] < c.representative) {
        c.representative = polys[m];
        c.representative_index = m;
      }
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.representative < y.representative; });
  return classes;
}

// ---------------------------------------------------------------------------
// Catalogs.

struct PolygonEntry {
  std::string name;
  RatPolygon polygon;
};

/// The bounded Z^2-maximal lattice-free half-integral polygons Q2..Q5. The
/// fifth class, the strip [0,1] x R, is unbounded and not stored.
inline std::vector<PolygonEntry> half_integral_catalog() {
  auto poly = [](std::initializer_list<std::pair<Rat, Rat>> vs) {
    std::vector<Vec2<Rat>> pts;
    for (const auto& [x, y] : vs) pts.push_back({{x, y}});
    return RatPolygon::hull(std::move(pts));
  };
  const Rat h(1, 2);
  return {
      {"Q2", poly({{0, 0}, {2, 0}, {0, 2}})},
      {"Q3", poly({{-1, 0}, {2, 0}, {h, Rat(3, 2)}})},
      {"Q4", poly({{-h, 0}, {Rat(3, 2), 0}, {h, 2}})},
      {"Q5", poly({{-h, h}, {h, Rat(3, 2)}, {Rat(3, 2), h}, {h, -h}})},
  };
}

inline constexpr const char* kUnboundedPlanarClass = "Q1 = [0,1] x R";

struct CatalogEntry {
  std::string name;
  IntPolytope polytope;
  Integer facet_label = 0;  ///< number of facets
  Integer ld_label = 0;     ///< lattice diameter
  /// Brings the polytope into R^2 x [-1, 1] with width two in direction e3.
  AffineUnimodularMap<3> normal_position;
};

/// The seven Z^3-maximal lattice-free integral polytopes of lattice width two.
inline std::vector<CatalogEntry> width_two_catalog() {
  auto entry = [](std::string name, std::vector<IntVec3> vs, Integer i, Integer j) {
    return CatalogEntry{std::move(name), IntPolytope::hull(std::move(vs)), i, j,
                        AffineUnimodularMap<3>::translation({{0, 0, -1}})};
  };
  return {
      entry("M(4,6)", {{{-2, 0, 0}}, {{4, 0, 0}}, {{1, 3, 0}}, {{0, 0, 2}}}, 4, 6),
      entry("M(4,4)", {{{0, 0, 0}}, {{4, 0, 0}}, {{0, 4, 0}}, {{0, 0, 2}}}, 4, 4),
      entry("M(4,2)", {{{-1, 1, 0}}, {{1, 3, 0}}, {{0, 0, 2}}, {{2, -2, 2}}}, 4, 2),
      entry("M'(4,4)", {{{-1, 0, 0}}, {{3, 0, 0}}, {{1, 4, 0}}, {{0, 0, 2}}}, 4, 4),
      entry("M(5,4)", {{{1, -1, 0}}, {{-1, 1, 0}}, {{3, 1, 0}}, {{1, 3, 0}}, {{0, 0, 2}}}, 5, 4),
      entry("M(5,2)", {{{-1, 0, 0}}, {{1, 0, 0}}, {{0, 2, 0}}, {{0, 0, 2}}, {{2, 0, 2}}, {{1, 2, 2}}}, 5, 2),
      entry("M(6,2)",
            {{{0, 0, 0}}, {{-1, 1, 0}}, {{0, 2, 0}}, {{1, 1, 0}}, {{0, 0, 2}}, {{1, 1, 2}}, {{2, 0, 2}}, {{1, -1, 2}}},
            6, 2),
  };
}

struct Check {
  std::string subject;
  std::string property;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

inline std::vector<Check> verify_catalogs() {
  std::vector<Check> out;
  auto add = [&](const std::string& subject, const std::string& property, bool ok, std::string detail = {}) {
    out.push_back({subject, property, ok, std::move(detail)});
  };
  for (const auto& e : width_two_catalog()) {
    const auto& p = e.polytope;
    const bool free = p.full_dimensional() && is_lattice_free(p);
    add(e.name, "lattice_free", free);
    add(e.name, "facet_count", static_cast<Integer>(p.facets().size()) == e.facet_label,
        std::to_string(p.facets().size()));
    const Integer ld = lattice_diameter(p);
    add(e.name, "lattice_diameter", ld == e.ld_label, std::to_string(ld));
    const Integer w3 = width_in_direction(p, IntVec3{{0, 0, 1}});
    add(e.name, "width_e3", w3 == 2, std::to_string(w3));
    const auto lw = lattice_width_heuristic(p, 5);
    add(e.name, "lattice_width_upper_bound", lw.width == 2, to_string(lw.width));
    add(e.name, "r_maximal", free && is_r_maximal(p));
  }
  for (const auto& q : half_integral_catalog()) {
    const bool free = q.polygon.full_dimensional() && is_lattice_free(q.polygon);
    add(q.name, "half_integral", is_half_integral(q.polygon));
    add(q.name, "lattice_free", free);
    add(q.name, "r_maximal", free && is_r_maximal_2d(q.polygon));
  }
  return out;
}

struct SliceReport {
  RatPolygon lower, middle, upper;  ///< slices at x3 = -1, 0, 1
  std::string middle_class;         ///< the Q_i the middle slice is equivalent to
  std::vector<Check> checks;
};

/// Layer structure of a width-two maximizer placed in R^2 x [-1, 1]: the
/// middle layer is a maximal half-integral polygon, the outer layers satisfy
/// P1 + P-1 ⊆ 2·P0 and 2·conv(non-integral vertices of P0) ⊆ P1 + P-1.
inline SliceReport slice_structure_check(const IntPolytope& m, const AffineUnimodularMap<3>& to_normal) {
  SliceReport r;
  const std::string name = "slices";
  auto add = [&](const std::string& property, bool ok, std::string detail = {}) {
    r.checks.push_back({name, property, ok, std::move(detail)});
  };
  const auto p = apply_map(to_normal, m);
  const Integer top = support(p, IntVec3{{0, 0, 1}}), bottom = -support(p, IntVec3{{0, 0, -1}});
  add("normal_position", top == 1 && bottom == -1);
  r.lower = slice_at_height(p, Rat(-1));
  r.middle = slice_at_height(p, Rat(0));
  r.upper = slice_at_height(p, Rat(1));

  const bool half = is_half_integral(r.middle);
  add("middle_half_integral", half);
  const bool free = r.middle.full_dimensional() && is_lattice_free(r.middle);
  add("middle_lattice_free", free);
  if (half && free) {
    for (const auto& q : half_integral_catalog())
      if (unimodular_equivalent_half_integral(r.middle, q.polygon)) {
        r.middle_class = q.name;
        break;
      }
  }
  add("middle_matches_catalog", !r.middle_class.empty(), r.middle_class);

  const auto sum = minkowski_sum_2d(r.upper, r.lower);
  const auto twice_middle = scaled(r.middle, Rat(2));
  add("outer_sum_in_twice_middle", twice_middle.contains(sum));
  std::vector<Vec2<Rat>> fractional;
  for (const auto& v : r.middle.vertices())
    if (!is_integral(v)) fractional.push_back(Rat(2) * v);
  bool covered = std::all_of(fractional.begin(), fractional.end(), [&](const auto& v) { return sum.contains(v); });
  add("fractional_vertices_in_outer_sum", covered, std::to_string(fractional.size()) + " non-integral vertices");
  return r;
}

// ---------------------------------------------------------------------------
// Brute-force classification of Z^2-maximal half-integral polygons.

struct PlanarOracleResult {
  std::vector<RatPolygon> classes;        ///< one representative per equivalence class
  std::vector<std::string> matched;       ///< catalog name per class ("" if unmatched)
  std::size_t lattice_free_polygons = 0;  ///< full-dimensional lattice-free polygons visited
  std::size_t z_filter_survivors = 0;      ///< no lattice-free extension by a nearby integer point
  std::size_t r_maximal = 0;               ///< Z-filter survivors with every edge blocked
};

/// Enumerates every lattice-free polygon whose vertices are half-integral
/// points of [lo, hi]^2, up to integer translation (the lexicographically
/// smallest vertex lies in [0, 1)^2). Vertex sets are grown in lexicographic
/// order while they stay in convex position and lattice-free. Polygons that
/// admit no lattice-free extension by an integer point within `margin` and
/// are R^2-maximal are kept and deduplicated.
inline PlanarOracleResult brute_force_2d_oracle(Integer lo = -2, Integer hi = 4, Integer margin = 3) {
  if (margin < 1) throw std::invalid_argument("margin must be at least 1");
  if (lo > 0 || hi < 1) throw std::invalid_argument("window must contain [0, 1]^2");
  // Doubled coordinates: the lattice Z^2 becomes 2Z^2.
  std::vector<IntVec2> grid;
  for (Integer x = 0; x <= 2 * hi; ++x)
    for (Integer y = 2 * lo; y <= 2 * hi; ++y) grid.push_back({{x, y}});
  std::sort(grid.begin(), grid.end());

  PlanarOracleResult result;
  std::vector<IntPolygon> kept;
  std::vector<IntVec2> chosen;
  auto visit = [&](auto&& self, std::size_t next, const IntPolygon& current) -> void {
    for (std::size_t i = next; i < grid.size(); ++i) {
      chosen.push_back(grid[i]);
      auto poly = IntPolygon::hull(chosen);
      const bool convex_position = poly.vertices().size() == chosen.size();
      bool ok = convex_position;
      if (ok && poly.full_dimensional()) ok = is_lattice_free(poly, 2);
      if (ok) {
        if (poly.full_dimensional()) {
          ++result.lattice_free_polygons;
          if (!z_nonmaximality_certificate(poly, margin, 2)) {
            ++result.z_filter_survivors;
            if (is_r_maximal(poly, 2)) {
              ++result.r_maximal;
              kept.push_back(poly);
            }
          }
        }
        self(self, i + 1, poly);
      }
      chosen.pop_back();
    }
    (void)current;
  };
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i][0] > 1 || grid[i][1] < 0 || grid[i][1] > 1) continue;
    chosen = {grid[i]};
    visit(visit, i + 1, IntPolygon::hull(chosen));
  }

  std::vector<IntPolygon> reps;
  for (const auto& p : kept) {
    bool seen = false;
    for (const auto& r : reps) seen = seen || unimodular_equivalent(r, p, 2).has_value();
    if (!seen) reps.push_back(p);
  }
  const auto catalog = half_integral_catalog();
  for (const auto& r : reps) {
    std::vector<Vec2<Rat>> pts;
    for (const auto& v : r.vertices()) pts.push_back({{Rat(v[0], 2), Rat(v[1], 2)}});
    auto poly = RatPolygon::hull(std::move(pts));
    std::string name;
    for (const auto& q : catalog)
      if (unimodular_equivalent_half_integral(poly, q.polygon)) {
        name = q.name;
        break;
      }
    result.classes.push_back(std::move(poly));
    result.matched.push_back(name);
  }
  return result;
}

}  // namespace latmax
