#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace latmax;
using namespace latmax::testing;

namespace {

// Integer points of a tetrahedron from orientation signs alone.
std::vector<IntVec3> simplex_points_oracle(const std::vector<IntVec3>& v, bool strict) {
  IntVec3 lo = v[0], hi = v[0];
  for (const auto& p : v)
    for (std::size_t i = 0; i < 3; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  const int faces[4][4] = {{1, 2, 3, 0}, {0, 2, 3, 1}, {0, 1, 3, 2}, {0, 1, 2, 3}};
  std::vector<IntVec3> out;
  for (Integer x = lo[0]; x <= hi[0]; ++x)
    for (Integer y = lo[1]; y <= hi[1]; ++y)
      for (Integer z = lo[2]; z <= hi[2]; ++z) {
        IntVec3 q = P(x, y, z);
        bool in = true;
        for (const auto& f : faces) {
          int s = orient3(v[f[0]], v[f[1]], v[f[2]], q);
          int ref = orient3(v[f[0]], v[f[1]], v[f[2]], v[f[3]]);
          in = in && (strict ? s == ref : s * ref >= 0);
        }
        if (in) out.push_back(q);
      }
  std::sort(out.begin(), out.end());
  return out;
}

Integer brute_min_width(const IntPolytope& p, Integer radius) { return to_integer(lattice_width_heuristic(p, radius).width); }

}  // namespace

TEST(IntegerPoints, Examples) {
  EXPECT_EQ(integer_points(cube(1)).size(), 8u);
  EXPECT_EQ(integer_points(IntPolytope::hull({P(0, 0, 0), P(2, 0, 0), P(0, 2, 0)})).size(), 6u);
  const auto& m = catalog_entry("M(4,2)").polytope;
  EXPECT_EQ(integer_points(m), simplex_points_oracle(m.vertices(), false));
}

TEST(IntegerPoints, RandomTetrahedraAgreeWithOrientationOracle) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    auto t = random_tetrahedron(rng, -4, 4);
    EXPECT_EQ(integer_points(t), simplex_points_oracle(t.vertices(), false));
    auto interior = collect_points(lattice_region(t, Closure::relative_interior));
    EXPECT_EQ(interior, simplex_points_oracle(t.vertices(), true));
    EXPECT_EQ(is_lattice_free(t), interior.empty());
  }
}

TEST(IntegerPoints, EquivariantUnderUnimodularMaps) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 40; ++i) {
    std::vector<IntVec3> pts;
    for (int k = 0; k < 6; ++k) pts.push_back(random_point<3>(rng, -3, 3));
    auto p = IntPolytope::hull(pts);
    auto phi = random_unimodular<3>(rng);
    std::vector<IntVec3> image;
    for (const auto& q : integer_points(p)) image.push_back(phi(q));
    std::sort(image.begin(), image.end());
    EXPECT_EQ(integer_points(apply_map(phi, p)), image);
  }
}

TEST(LatticeFree, Examples) {
  EXPECT_TRUE(is_lattice_free(cube(1)));
  EXPECT_FALSE(is_lattice_free(cube(2)));
  EXPECT_EQ(interior_lattice_point(cube(2)), P(1, 1, 1));
  EXPECT_TRUE(is_lattice_free(catalog_entry("M(4,6)").polytope));
  EXPECT_THROW(is_lattice_free(IntPolytope::hull({P(0, 0, 0), P(5, 0, 0), P(0, 5, 0)})), std::invalid_argument);
}

TEST(LatticeDiameter, Examples) {
  EXPECT_EQ(lattice_diameter(IntPolytope::hull({P(0, 0, 0), P(3, 0, 0)})), 3);
  EXPECT_EQ(lattice_diameter(catalog_entry("M(4,6)").polytope), 6);
  EXPECT_EQ(lattice_diameter(unit_simplex()), 1);
  EXPECT_EQ(lattice_diameter(IntPolytope::hull({P(1, 1, 1)})), 0);
  auto w = lattice_diameter_witness(catalog_entry("M(4,6)").polytope);
  EXPECT_EQ(content(IntVec3(w.z_prime - w.z)), 6);
}

TEST(LatticeDiameter, MonotoneUnderInclusion) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    std::vector<IntVec3> pts;
    for (int k = 0; k < 7; ++k) pts.push_back(random_point<3>(rng, -3, 3));
    auto p = IntPolytope::hull(pts);
    pts.resize(4);
    auto q = IntPolytope::hull(pts);
    EXPECT_GE(lattice_diameter(p), lattice_diameter(q));
  }
}

TEST(FirstMinimum, Examples) {
  auto box = [](Integer s) {
    return IntPolytope::hull({P(-s, -s, -s), P(s, s, s), P(-s, s, s), P(s, -s, s), P(s, s, -s), P(-s, -s, s),
                              P(-s, s, -s), P(s, -s, -s)});
  };
  EXPECT_TRUE(first_minimum_exceeds_quarter(box(1)));
  EXPECT_FALSE(first_minimum_exceeds_quarter(box(5)));
  EXPECT_EQ(quarter_body_lattice_point(box(4)).has_value(), true);
  auto t = IntPolytope::hull({P(0, 0, 0), P(2, 0, 0), P(0, 1, 0), P(0, 0, 3)});
  EXPECT_TRUE(first_minimum_exceeds_quarter(difference_body(t)));
  EXPECT_THROW(first_minimum_exceeds_quarter(cube(1)), std::invalid_argument);
}

TEST(WidthTest, Examples) {
  auto p = IntPolytope::hull({P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 3)});
  for (const auto& d : width_test_directions(P(0, 0, 3))) EXPECT_EQ(d[2], 0);
  EXPECT_FALSE(has_lattice_width_at_least_three(p, P(0, 0, 3)));
  EXPECT_THROW(has_lattice_width_at_least_three(cube(1), P(0, 0, 3)), std::invalid_argument);
  auto flat = IntPolytope::hull({P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(5, 5, 2), P(-4, 3, 1), P(3, -6, 0)});
  EXPECT_FALSE(has_lattice_width_at_least_three(flat, P(5, 5, 2)));
  EXPECT_LT(brute_min_width(flat, 5), 3);
}

// The finite direction set decides lw >= 3 exactly as a scan over all
// primitive directions of ∞-norm <= 5 does.
TEST(WidthTest, AgreesWithDirectionScan) {
  std::mt19937_64 rng(200);
  int tested = 0, wide = 0;
  while (tested < 200) {
    std::uniform_int_distribution<Integer> hd(1, 6);
    const Integer h = hd(rng);
    std::uniform_int_distribution<Integer> ad(0, h - 1);
    const IntVec3 apex = P(ad(rng), ad(rng), h);
    std::vector<IntVec3> pts{P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), apex};
    std::uniform_int_distribution<int> extra(1, 5);
    for (int k = extra(rng); k > 0; --k) {
      auto q = random_point<3>(rng, -4, 4);
      q[2] = std::uniform_int_distribution<Integer>(-2, h + 2)(rng);
      pts.push_back(q);
    }
    auto p = IntPolytope::hull(pts);
    if (!p.full_dimensional()) continue;
    ++tested;
    const bool fast = has_lattice_width_at_least_three(p, apex);
    EXPECT_EQ(fast, brute_min_width(p, 5) >= 3) << "apex " << apex;
    wide += fast;
  }
  EXPECT_GT(wide, 10);
  EXPECT_LT(wide, 190);
}

TEST(WidthHeuristic, Examples) {
  auto c = lattice_width_heuristic(cube(1), 1);
  EXPECT_EQ(c.width, R(1));
  EXPECT_EQ(c.direction, P(1, 0, 0));
  EXPECT_EQ(lattice_width_heuristic(catalog_entry("M(6,2)").polytope, 5).width, R(2));
  auto prism = IntPolytope::hull({P(0, 0, 0), P(2, 0, 0), P(0, 2, 0), P(0, 0, 1), P(2, 0, 1), P(0, 2, 1)});
  auto w = lattice_width_heuristic(prism, 5);
  EXPECT_EQ(w.width, R(1));
  EXPECT_EQ(w.direction, P(0, 0, 1));
  EXPECT_THROW(lattice_width_heuristic(cube(1), 0), std::invalid_argument);
}

TEST(PrimitiveDirections, CountAndOrder) {
  auto dirs = primitive_directions<2>(1);
  EXPECT_EQ(dirs, (std::vector<Direction<2>>{P(1, 0), P(0, 1), P(1, 1), P(1, -1)}));
  // Primitive vectors in [-2,2]^3 up to sign.
  EXPECT_EQ(primitive_directions<3>(2).size(), 49u);
}

TEST(FacetBlocked, Examples) {
  const auto& m44 = catalog_entry("M(4,4)").polytope;
  bool found = false;
  for (std::size_t f = 0; f < m44.facets().size(); ++f)
    if (m44.facets()[f].normal == P(0, 0, -1)) {
      EXPECT_EQ(facet_blocking_point(m44, f), P(1, 1, 0));
      found = true;
    }
  EXPECT_TRUE(found);
  const auto s = unit_simplex();
  for (std::size_t f = 0; f < s.facets().size(); ++f)
    if (s.facets()[f].normal == P(-1, 0, 0)) {
      EXPECT_FALSE(facet_blocked(s, f));
    }
  const auto& m46 = catalog_entry("M(4,6)").polytope;
  for (std::size_t f = 0; f < m46.facets().size(); ++f) EXPECT_TRUE(facet_blocked(m46, f));
}

TEST(NormalizeApex, Examples) {
  EXPECT_EQ(normalize_apex(P(7, -2, 3)).second, P(1, 1, 3));
  auto [id, a] = normalize_apex(P(0, 0, 5));
  EXPECT_EQ(id, AffineUnimodularMap<3>());
  EXPECT_EQ(a, P(0, 0, 5));
  EXPECT_EQ(normalize_apex(P(12, 12, 12)).second, P(0, 0, 12));
  auto [phi, b] = normalize_apex(P(-5, 9, 4));
  EXPECT_EQ(phi(P(-5, 9, 4)), b);
  EXPECT_EQ(phi(P(1, 0, 0)), P(1, 0, 0));
  EXPECT_EQ(phi(P(0, 1, 0)), P(0, 1, 0));
  EXPECT_THROW(normalize_apex(P(1, 1, 0)), std::invalid_argument);
}

TEST(Invariance, CatalogFunctionalsUnderRandomMaps) {
  std::mt19937_64 rng(77);
  for (const auto& e : width_two_catalog()) {
    const auto& m = e.polytope;
    const auto ld = lattice_diameter(m);
    const auto n = integer_points(m).size();
    const bool fm = first_minimum_exceeds_quarter(difference_body(m));
    const auto w = lattice_width_heuristic(m, 5).width;
    for (int i = 0; i < 20; ++i) {
      auto phi = random_unimodular<3>(rng);
      auto img = apply_map(phi, m);
      EXPECT_TRUE(is_lattice_free(img)) << e.name;
      EXPECT_EQ(lattice_diameter(img), ld) << e.name;
      EXPECT_EQ(integer_points(img).size(), n) << e.name;
      EXPECT_EQ(first_minimum_exceeds_quarter(difference_body(img)), fm) << e.name;
      EXPECT_EQ(lattice_width_heuristic(img, 5).width, w) << e.name;
      EXPECT_EQ(volume(img), volume(m)) << e.name;
      for (std::size_t f = 0; f < img.facets().size(); ++f) EXPECT_TRUE(facet_blocked(img, f)) << e.name;
    }
  }
  for (const auto& q : half_integral_catalog()) {
    const auto n = integer_points(q.polygon).size();
    for (int i = 0; i < 20; ++i) {
      auto phi = random_unimodular<2>(rng);
      auto img = apply_map(phi, q.polygon);
      EXPECT_TRUE(is_lattice_free(img)) << q.name;
      EXPECT_EQ(integer_points(img).size(), n) << q.name;
      EXPECT_EQ(volume(img), volume(q.polygon)) << q.name;
      for (std::size_t f = 0; f < img.facets().size(); ++f) EXPECT_TRUE(facet_blocked(img, f)) << q.name;
    }
  }
}
