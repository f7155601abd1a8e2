#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "latcol/lattice.hpp"
#include "latcol/oracle.hpp"
#include "latcol/random.hpp"

namespace latcol {
namespace {

using Points = std::vector<LatticePoint>;

TEST(Gcd, BasicValues) {
  EXPECT_EQ(gcd(3, 7), 1);
  EXPECT_EQ(gcd(0, 15), 15);
  EXPECT_EQ(gcd(-4, 6), 2);
  EXPECT_EQ(gcd(0, 0), 0);
  EXPECT_EQ(gcd(-9, 0), 9);
}

TEST(SegmentInteriorCount, Examples) {
  EXPECT_EQ(segment_interior_count({0, 0}, {3, 7}), 0);
  EXPECT_EQ(segment_interior_count({0, 0}, {0, 5}), 4);
  EXPECT_EQ(segment_interior_count({0, 0}, {4, 6}), 1);
  EXPECT_EQ(segment_interior_count({-6, 9}, {6, -9}), 5);
}

TEST(SegmentInteriorCount, RejectsDegenerateAndOutOfRange) {
  EXPECT_THROW(segment_interior_count({2, 2}, {2, 2}), DegenerateSegment);
  EXPECT_THROW(segment_interior_count({0, 0}, {kCoordLimit + 1, 0}), RangeError);
  EXPECT_NO_THROW(segment_interior_count({-kCoordLimit, -kCoordLimit}, {kCoordLimit, kCoordLimit}));
}

TEST(SegmentInteriorCount, MatchesParameterScan) {
  Sampler rng(11);
  for (int i = 0; i < 3000; ++i) {
    const LatticePoint p = rng.point(-50, 50), q = rng.point(-50, 50);
    if (p == q) continue;
    ASSERT_EQ(segment_interior_count(p, q), oracle::segment_interior_scan(p, q))
        << to_string(p) << " " << to_string(q);
  }
}

TEST(TwiceArea, Examples) {
  EXPECT_EQ(twice_area(LatticeTriangle{{0, 0}, {1, 0}, {2, 15}}), 15);
  EXPECT_EQ(twice_area({0, 0}, {1, 1}, {2, 2}), 0);
  EXPECT_EQ(twice_area(LatticeTriangle{{0, 0}, {3, 0}, {0, 3}}), 9);
  // Orientation does not matter.
  EXPECT_EQ(twice_area(LatticeTriangle{{0, 0}, {0, 3}, {3, 0}}), 9);
}

TEST(LatticeTriangle, RejectsDegenerateAndOutOfRange) {
  EXPECT_THROW((LatticeTriangle{{0, 0}, {1, 1}, {2, 2}}), DegenerateTriangle);
  EXPECT_THROW((LatticeTriangle{{0, 0}, {0, 0}, {2, 3}}), DegenerateTriangle);
  EXPECT_THROW((LatticeTriangle{{0, 0}, {1, 0}, {0, -kCoordLimit - 1}}), RangeError);
}

TEST(LatticeTriangle, ExtremeCoordinatesStayExact) {
  const Int L = kCoordLimit;
  const LatticeTriangle t{{-L, -L}, {L, -L}, {-L, L}};
  EXPECT_EQ(twice_area(t), 4 * L * L);
  EXPECT_EQ(boundary_count(t), 2 * L + 2 * L + 2 * L);
  EXPECT_EQ(stats(t).interior, (4 * L * L - 6 * L + 2) / 2);
}

TEST(BoundaryCount, Examples) {
  EXPECT_EQ(boundary_count({{0, 0}, {1, 0}, {2, 15}}), 3);
  EXPECT_EQ(boundary_count({{0, 0}, {1, 0}, {0, 3}}), 5);
  EXPECT_EQ(boundary_count({{0, 0}, {3, 0}, {0, 3}}), 9);
}

TEST(InteriorCountPick, Examples) {
  EXPECT_EQ(interior_count_pick({{0, 0}, {1, 0}, {2, 15}}), 7);
  EXPECT_EQ(interior_count_pick({{0, 0}, {1, 0}, {0, 3}}), 0);
  EXPECT_EQ(interior_count_pick({{0, 0}, {1, 0}, {3, 7}}), 3);
}

TEST(InteriorCountPick, ZeroInteriorFamily) {
  // (0,0), (1,0), (0, k-2) has no interior points and k boundary points.
  for (Int k = 3; k < 60; ++k) {
    const LatticeTriangle t{{0, 0}, {1, 0}, {0, k - 2}};
    EXPECT_EQ(boundary_count(t), k);
    EXPECT_EQ(interior_count_pick(t), 0);
  }
}

TEST(InteriorPoints, Examples) {
  EXPECT_EQ(interior_points({{0, 0}, {1, 0}, {3, 7}}), (Points{{1, 1}, {1, 2}, {2, 4}}));
  EXPECT_TRUE(interior_points({{0, 0}, {1, 0}, {0, 3}}).empty());
  Points seven;
  for (Int y = 1; y <= 7; ++y) seven.push_back({1, y});
  EXPECT_EQ(interior_points({{0, 0}, {1, 0}, {2, 15}}), seven);
}

TEST(InteriorPoints, RowMajorAndIndependentOfVertexOrder) {
  const LatticePoint a{-7, 3}, b{12, -5}, c{4, 9};
  const Points ref = interior_points({a, b, c});
  EXPECT_EQ(ref.size(), 100u);
  EXPECT_TRUE(std::is_sorted(ref.begin(), ref.end(), row_major_less));
  EXPECT_EQ(interior_points({b, a, c}), ref);
  EXPECT_EQ(interior_points({c, b, a}), ref);
}

TEST(Collinear, Examples) {
  EXPECT_FALSE(collinear(Points{{1, 1}, {1, 2}, {2, 4}}));
  EXPECT_TRUE(collinear(Points{{5, 5}}));
  EXPECT_TRUE(collinear(Points{}));
  Points column;
  for (Int y = 1; y <= 7; ++y) column.push_back({1, y});
  EXPECT_TRUE(collinear(column));
}

TEST(Collinear, RepeatedPointsAndDiagonals) {
  EXPECT_TRUE(collinear(Points{{2, 2}, {2, 2}, {2, 2}}));
  EXPECT_TRUE(collinear(Points{{2, 2}, {2, 2}, {4, 6}, {3, 4}}));
  EXPECT_FALSE(collinear(Points{{2, 2}, {2, 2}, {4, 6}, {3, 5}}));
}

TEST(Collinear, PermutationAndTranslationInvariant) {
  Sampler rng(5);
  for (int i = 0; i < 500; ++i) {
    Points pts;
    const bool on_line = rng.uniform(0, 1) == 1;
    const LatticePoint base = rng.point(-20, 20), dir = rng.point(-3, 3);
    const int n = static_cast<int>(rng.uniform(0, 6));
    for (int j = 0; j < n; ++j) {
      LatticePoint p = on_line ? LatticePoint{base.x + dir.x * rng.uniform(-5, 5),
                                              base.y + dir.y * rng.uniform(-5, 5)}
                               : rng.point(-20, 20);
      pts.push_back(p);
    }
    const bool verdict = collinear(pts);
    Points shifted = pts;
    const LatticePoint s = rng.point(-100, 100);
    for (auto& p : shifted) p = {p.x + s.x, p.y + s.y};
    EXPECT_EQ(collinear(shifted), verdict);
    std::reverse(pts.begin(), pts.end());
    EXPECT_EQ(collinear(pts), verdict);
    std::rotate(pts.begin(), pts.begin() + pts.size() / 2, pts.end());
    EXPECT_EQ(collinear(pts), verdict);
  }
}

TEST(PickProperty, RandomTrianglesMatchBoundingBoxScan) {
  Sampler rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const LatticeTriangle t = rng.triangle(-30, 30);
    const oracle::ScanResult scan = oracle::scan_triangle(t);
    const TriangleStats s = stats(t);
    ASSERT_EQ(s.interior, static_cast<Int>(scan.interior.size()));
    ASSERT_EQ(s.boundary, scan.boundary);
    ASSERT_EQ(s.twice_area, s.boundary + 2 * s.interior - 2);
    ASSERT_EQ(interior_points(t), scan.interior);
  }
}

TEST(PickProperty, TranslationInvariant) {
  Sampler rng(99);
  for (int i = 0; i < 500; ++i) {
    const LatticeTriangle t = rng.triangle(-30, 30);
    const LatticePoint s = rng.point(-1000, 1000);
    auto moved = [&](const LatticePoint& p) { return LatticePoint{p.x + s.x, p.y + s.y}; };
    const LatticeTriangle u{moved(t.v1()), moved(t.v2()), moved(t.v3())};
    EXPECT_EQ(stats(u), stats(t));
  }
}

}  // namespace
}  // namespace latcol
