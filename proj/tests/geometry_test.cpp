#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace latmax;
using namespace latmax::testing;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rat("3"), R(3));
  EXPECT_EQ(parse_rat("-7/2"), R(-7, 2));
  EXPECT_EQ(to_string(R(-7, 2)), "-7/2");
  EXPECT_EQ(to_string(R(4, 2)), "2");
  for (const char* bad : {"", "1/", "/2", "1/0", "2/4", "1.5", "+1", "1/-2", "a", "1 "})
    EXPECT_THROW(parse_rat(bad), std::invalid_argument) << bad;
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(floor_of(R(-7, 2)), -4);
  EXPECT_EQ(ceil_of(R(7, 2)), 4);
  EXPECT_EQ(positive_mod(-2, 3), 1);
}

TEST(Hull, DropsInteriorAndBoundaryPoints) {
  auto p = IntPolytope::hull({P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(0, 0, 0)});
  auto q = IntPolytope::hull({P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)});
  EXPECT_EQ(p, q);
  auto half = RatPolytope::hull({{{R(0), R(0), R(0)}},
                                 {{R(1), R(0), R(0)}},
                                 {{R(0), R(1), R(0)}},
                                 {{R(0), R(0), R(1)}},
                                 {{R(1, 2), R(1, 2), R(0)}}});
  EXPECT_EQ(half.vertices().size(), 4u);
  EXPECT_EQ(half.facets().size(), 4u);
}

TEST(Hull, CatalogSimplexKeepsVertices) {
  const auto& m = catalog_entry("M(4,4)").polytope;
  EXPECT_EQ(m.vertices(), (std::vector<IntVec3>{P(0, 0, 0), P(0, 0, 2), P(0, 4, 0), P(4, 0, 0)}));
  EXPECT_EQ(m.facets().size(), 4u);
}

TEST(Hull, GridCube) {
  std::vector<IntVec3> pts;
  for (Integer x = 0; x <= 2; ++x)
    for (Integer y = 0; y <= 2; ++y)
      for (Integer z = 0; z <= 2; ++z) pts.push_back(P(x, y, z));
  auto p = IntPolytope::hull(pts);
  EXPECT_EQ(p, cube(2));
  EXPECT_EQ(p.vertices().size(), 8u);
  EXPECT_EQ(p.facets().size(), 6u);
}

TEST(Hull, LowerDimensional) {
  auto pt = IntPolytope::hull({P(1, 2, 3), P(1, 2, 3)});
  EXPECT_EQ(pt.dim(), 0);
  auto seg = IntPolytope::hull({P(0, 0, 0), P(3, 0, 0), P(1, 0, 0)});
  EXPECT_EQ(seg.dim(), 1);
  EXPECT_EQ(seg.vertices().size(), 2u);
  auto tri = IntPolytope::hull({P(0, 0, 0), P(2, 0, 0), P(0, 2, 0), P(1, 1, 0), P(1, 0, 0)});
  EXPECT_EQ(tri.dim(), 2);
  EXPECT_EQ(tri.vertices().size(), 3u);
  EXPECT_EQ(tri.facets().size(), 3u);
  auto tilted = IntPolytope::hull({P(0, 0, 0), P(1, 0, 1), P(0, 1, 1), P(1, 1, 2), P(2, 2, 4)});
  EXPECT_EQ(tilted.dim(), 2);
  EXPECT_EQ(tilted.vertices().size(), 4u);
}

TEST(Hull, RejectsOversizedCoordinates) {
  EXPECT_THROW(IntPolytope::hull({P(0, 0, 0), P(kMaxCoordinate + 1, 0, 0)}), std::overflow_error);
}

// Facet data agree with the vertices: every vertex satisfies every facet,
// tight on at least three; every other input point is redundant.
TEST(Hull, RandomPointSetsAreConsistent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<IntVec3> pts;
    const int n = 4 + trial % 12;
    for (int i = 0; i < n; ++i) pts.push_back(random_point<3>(rng, -3, 3));
    auto p = IntPolytope::hull(pts);
    if (!p.full_dimensional()) continue;
    for (const auto& v : p.vertices()) {
      int tight = 0;
      for (const auto& f : p.facets()) {
        ASSERT_LE(dot(f.normal, v), f.offset);
        tight += dot(f.normal, v) == f.offset;
      }
      EXPECT_GE(tight, 3);
    }
    for (const auto& q : pts) {
      EXPECT_TRUE(p.contains(q));
      if (std::binary_search(p.vertices().begin(), p.vertices().end(), q)) continue;
      // A non-vertex is a convex combination of the others: the hull without it is unchanged.
      std::vector<IntVec3> rest;
      for (const auto& r : pts)
        if (r != q) rest.push_back(r);
      EXPECT_EQ(IntPolytope::hull(rest), p);
    }
    for (const auto& f : p.facets()) EXPECT_EQ(content(f.normal), 1);
  }
}

TEST(Volume, Examples) {
  EXPECT_EQ(volume(unit_simplex()), R(1, 6));
  EXPECT_EQ(volume(catalog_entry("M(4,4)").polytope), R(16, 3));
  EXPECT_EQ(volume(IntPolytope::hull({P(0, 0, 0), P(2, 0, 0), P(0, 1, 0), P(0, 0, 3)})), R(1));
  EXPECT_EQ(volume(cube(2)), R(8));
  EXPECT_THROW(volume(IntPolytope::hull({P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)})), std::invalid_argument);
  EXPECT_EQ(volume(planar_entry("Q5")), R(2));
}

// Oracle: |det(v1 - v0, v2 - v0, v3 - v0)| / 6.
TEST(Volume, MatchesDeterminantOnSimplices) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto t = random_tetrahedron(rng, -6, 6);
    const auto& v = t.vertices();
    Integer d = det3(IntVec3(v[1] - v[0]), IntVec3(v[2] - v[0]), IntVec3(v[3] - v[0]));
    EXPECT_EQ(volume(t), R(std::abs(d), 6));
  }
}

TEST(Volume, InvariantUnderUnimodularMaps) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    std::vector<IntVec3> pts;
    for (int k = 0; k < 8; ++k) pts.push_back(random_point<3>(rng, -4, 4));
    auto p = IntPolytope::hull(pts);
    if (!p.full_dimensional()) continue;
    auto phi = random_unimodular<3>(rng);
    EXPECT_EQ(volume(apply_map(phi, p)), volume(p));
  }
}

TEST(DifferenceBody, Examples) {
  auto d = difference_body(cube(1));
  auto box = IntPolytope::hull({P(-1, -1, -1), P(1, 1, 1), P(-1, 1, 1), P(1, -1, 1), P(1, 1, -1), P(-1, -1, 1),
                                P(-1, 1, -1), P(1, -1, -1)});
  EXPECT_EQ(d, box);
  auto seg = difference_body(IntPolytope::hull({P(0, 0, 0), P(3, 0, 0)}));
  EXPECT_EQ(seg, IntPolytope::hull({P(-3, 0, 0), P(3, 0, 0)}));
}

TEST(DifferenceBody, SimplexLawOnRandomTetrahedra) {
  std::mt19937_64 rng(20);
  for (int i = 0; i < 100; ++i) {
    auto t = random_tetrahedron(rng, -5, 5);
    auto d = difference_body(t);
    EXPECT_TRUE(is_origin_symmetric(d));
    EXPECT_EQ(volume(d), Rat(kSimplexDifferenceFactor) * volume(t));
  }
}

TEST(Width, Examples) {
  EXPECT_EQ(width_in_direction(cube(1), P(1, 0, 0)), 1);
  EXPECT_EQ(width_in_direction(catalog_entry("M(4,4)").polytope, P(0, 0, 1)), 2);
  EXPECT_EQ(width_in_direction(planar_entry("Q2"), P(1, 1)), R(2));
  EXPECT_EQ(support(cube(1), P(1, 1, 1)), 3);
}

TEST(Slice, Examples) {
  auto sq = slice_at_height(cube(1), R(1, 2));
  EXPECT_EQ(sq, RatPolygon::hull({{{R(0), R(0)}}, {{R(1), R(0)}}, {{R(0), R(1)}}, {{R(1), R(1)}}}));
  auto m = apply_map(AffineUnimodularMap<3>::translation(P(0, 0, -1)), catalog_entry("M(4,4)").polytope);
  auto mid = slice_at_height(m, R(0));
  EXPECT_TRUE(is_half_integral(mid));
  EXPECT_EQ(mid.vertices().size(), 3u);
  auto top = slice_at_height(m, R(1));
  EXPECT_EQ(top.dim(), 0);
  EXPECT_EQ(top.vertices(), (std::vector<Vec2<Rat>>{{{R(0), R(0)}}}));
  EXPECT_TRUE(slice_at_height(m, R(3)).empty());
}

TEST(Minkowski, Examples) {
  auto sq = RatPolygon::hull({{{R(0), R(0)}}, {{R(1), R(0)}}, {{R(0), R(1)}}, {{R(1), R(1)}}});
  EXPECT_EQ(minkowski_sum_2d(sq, sq), scaled(sq, R(2)));
  auto h = RatPolygon::hull({{{R(-1), R(0)}}, {{R(1), R(0)}}});
  auto v = RatPolygon::hull({{{R(0), R(-1)}}, {{R(0), R(1)}}});
  auto box = RatPolygon::hull({{{R(-1), R(-1)}}, {{R(1), R(-1)}}, {{R(-1), R(1)}}, {{R(1), R(1)}}});
  EXPECT_EQ(minkowski_sum_2d(h, v), box);
}

TEST(Minkowski, CommutativeAndTranslationEquivariant) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    std::vector<IntVec2> a, b;
    for (int k = 0; k < 5; ++k) {
      a.push_back(random_point<2>(rng, -3, 3));
      b.push_back(random_point<2>(rng, -3, 3));
    }
    auto pa = IntPolygon::hull(a), pb = IntPolygon::hull(b);
    EXPECT_EQ(minkowski_sum_2d(pa, pb), minkowski_sum_2d(pb, pa));
    auto t = random_point<2>(rng, -4, 4);
    EXPECT_EQ(minkowski_sum_2d(translated(pa, t), pb), translated(minkowski_sum_2d(pa, pb), t));
  }
}

TEST(UnimodularMap, Examples) {
  const auto& m = catalog_entry("M(4,6)").polytope;
  EXPECT_EQ(apply_map(AffineUnimodularMap<3>(), m), m);
  auto seg = IntPolytope::hull({P(0, 0, 0), P(1, 0, 0)});
  EXPECT_EQ(apply_map(AffineUnimodularMap<3>::translation(P(0, 0, 1)), seg),
            IntPolytope::hull({P(0, 0, 1), P(1, 0, 1)}));
  IntMatrix<3> shear = identity_matrix<3>();
  shear[0][2] = 2;
  shear[1][2] = -1;
  AffineUnimodularMap<3> phi(shear, IntVec3{});
  EXPECT_EQ(phi(P(1, 2, 3)), P(7, -1, 3));
  IntMatrix<3> bad = identity_matrix<3>();
  bad[0][0] = 2;
  EXPECT_THROW(AffineUnimodularMap<3>(bad, IntVec3{}), std::invalid_argument);
}

TEST(UnimodularMap, InverseAndCompose) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    auto f = random_unimodular<3>(rng), g = random_unimodular<3>(rng);
    auto x = random_point<3>(rng, -10, 10);
    EXPECT_EQ(f.inverse()(f(x)), x);
    EXPECT_EQ(f.compose(g)(x), f(g(x)));
  }
}
