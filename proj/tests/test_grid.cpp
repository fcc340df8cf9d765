#include <gtest/gtest.h>

#include <set>

#include "lrskep/grid.hpp"
#include "lrskep/skep.hpp"
#include "support.hpp"

using namespace lrskep;
using lrskep::testing::Gen;

TEST(Triangle, IndexIsABijectionInRasterOrder) {
  for (int n = 0; n <= 7; ++n) {
    auto pts = tri_points(n);
    ASSERT_EQ(pts.size(), tri_size(n));
    for (std::size_t k = 0; k < pts.size(); ++k) EXPECT_EQ(tri_index(n, pts[k].i, pts[k].j), k);
  }
  EXPECT_THROW(tri_size(-1), std::invalid_argument);
}

TEST(Triangle, ParityClasses) {
  EXPECT_EQ(parity(4, 0, 4), Parity::plus);
  EXPECT_EQ(parity(0, 0, 4), Parity::plus);
  EXPECT_EQ(parity(3, 0, 4), Parity::minus);
  EXPECT_EQ(parity(0, 0, 3), Parity::minus);
  EXPECT_EQ(epsilon(1, 1, 4), 0);
  EXPECT_EQ(epsilon(1, 2, 4), 1);
  EXPECT_THROW(parity(3, 2, 4), std::out_of_range);
  EXPECT_THROW(parity(-1, 0, 4), std::out_of_range);
  for (int n = 0; n <= 6; ++n) {
    auto plus = tri_points(n, Parity::plus), minus = tri_points(n, Parity::minus);
    EXPECT_EQ(plus.size() + minus.size(), tri_size(n));
    // The corners (n,0) and (0,n) are always plus.
    EXPECT_EQ(parity(n, 0, n), Parity::plus);
    EXPECT_EQ(parity(0, n, n), Parity::plus);
  }
}

TEST(Triangle, CornerPath) {
  auto p = corner_path(3);
  std::vector<Point> want{{3, 0}, {2, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(p, want);
  // Even positions on the path are plus points.
  for (int n = 1; n <= 6; ++n) {
    auto q = corner_path(n);
    for (std::size_t k = 0; k < q.size(); ++k)
      EXPECT_EQ(parity(q[k].i, q[k].j, n), k % 2 == 0 ? Parity::plus : Parity::minus);
  }
}

TEST(TriGrid, RowsRoundTripAndBounds) {
  TriGrid g = lrskep::testing::example_skep();
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g(0, 0), 10);
  EXPECT_EQ(g(4, 0), 0);
  EXPECT_EQ(g(0, 4), 11);
  EXPECT_EQ(g(3, 1), 5);
  EXPECT_EQ(TriGrid::from_rows(g.rows()), g);
  EXPECT_THROW(g.at(5, 0), std::out_of_range);
  EXPECT_THROW(g.set(2, 3, 1), std::out_of_range);
  EXPECT_THROW(TriGrid::from_rows({{1, 2}, {3, 4}}), std::invalid_argument);
  EXPECT_THROW(TriGrid::from_rows({}), std::invalid_argument);
}

TEST(HalfGrid, RejectsOtherParity) {
  PlusGrid gp(3);
  EXPECT_TRUE(gp.contains(3, 0));
  EXPECT_FALSE(gp.contains(2, 0));
  EXPECT_THROW(gp.set(2, 0, 1), std::out_of_range);
  MinusGrid gm(3);
  EXPECT_NO_THROW(gm.set(2, 0, 1));
  EXPECT_THROW(gm.at(3, 0), std::out_of_range);
}

TEST(Split, InterweaveInvertsSplit) {
  Gen gen(11);
  for (int rep = 0; rep < 200; ++rep) {
    int n = static_cast<int>(gen.uniform(0, 6));
    TriGrid g = gen.grid(n, -20, 20);
    SplitGrid s = split(g);
    EXPECT_EQ(interweave(s.plus, s.minus), g);
    for (const Point& p : s.plus.points()) EXPECT_EQ(s.plus(p), g(p));
    for (const Point& p : s.minus.points()) EXPECT_EQ(s.minus(p), g(p));
  }
  EXPECT_THROW(interweave(PlusGrid(2), MinusGrid(3)), std::invalid_argument);
}

TEST(Boundary, ExampleSkep) {
  TriGrid g = lrskep::testing::example_skep();
  EXPECT_EQ(boundary_corner(g), (IntVec{4, 3, 2, 1, 1, 0, 0, 0}));
  EXPECT_EQ(boundary_diag(g), (IntVec{5, 3, 2, 1}));
  EXPECT_EQ(boundary_diag(split(g).plus), (IntVec{5, 3, 2, 1}));
}

TEST(Boundary, CornerTelescopes) {
  Gen gen(12);
  for (int rep = 0; rep < 100; ++rep) {
    int n = static_cast<int>(gen.uniform(1, 6));
    TriGrid g = gen.grid(n, -30, 30);
    EXPECT_EQ(boundary_corner(g).sum(), g(0, n) - g(n, 0));
    EXPECT_EQ(boundary_diag(g).sum(), g(0, n) - g(n, 0));
    EXPECT_EQ(boundary_diag(g), boundary_diag(split(g).plus));
    // Differences are unchanged by normalization.
    TriGrid h = normalized(g);
    EXPECT_EQ(h(n, 0), 0);
    EXPECT_EQ(boundary_corner(h), boundary_corner(g));
    EXPECT_EQ(normalized(split(g).plus), split(h).plus);
  }
}

TEST(Inequalities, FirstViolationIsReported) {
  TriGrid g(1);
  g.set(0, 0, 1);
  std::vector<GridInequality> q{{7, {0, 0}, {{0, 0}}, {{1, 0}}}, {8, {0, 1}, {{1, 0}}, {{0, 0}}}};
  Validity v = check_inequalities(g, q);
  ASSERT_FALSE(v);
  EXPECT_EQ(v.witness->family, 8);
  EXPECT_EQ(v.witness->lhs, 0);
  EXPECT_EQ(v.witness->rhs, 1);
  EXPECT_EQ(v.witness->describe(), "family 8 at (0,1): 0 < 1");
  EXPECT_TRUE(check_inequalities(g, {q[0]}));
}
