#include <gtest/gtest.h>

#include <set>

#include "lrskep/lattice.hpp"
#include "lrskep/lconvex.hpp"
#include "support.hpp"

using namespace lrskep;
using lrskep::testing::Gen;

namespace {

// Random constraints on M + N coordinates whose fibers over the first M are
// finite: every fiber coordinate gets a two-sided bound against coordinate 0.
DiffConstraints finite_fiber_instance(Gen& gen, std::size_t M, std::size_t N) {
  DiffConstraints dc = gen.constraints(M + N, -3, 3, 40);
  for (std::size_t k = M; k < M + N; ++k) {
    if (!dc.get(k, 0)) dc.set(k, 0, gen.uniform(-3, 3));
    if (!dc.get(0, k)) dc.set(0, k, gen.uniform(-3, 3));
  }
  return dc;
}

std::uint64_t brute_marginal(const DiffConstraints& dc, const IntVec& x, Int radius) {
  std::size_t N = dc.n() - x.size();
  std::uint64_t total = 0;
  for (const IntVec& y : box_points(IntVec(N, -radius), IntVec(N, radius))) {
    std::vector<Int> full(x.begin(), x.end());
    full.insert(full.end(), y.begin(), y.end());
    if (dc_contains(dc, IntVec(full))) ++total;
  }
  return total;
}

}  // namespace

TEST(Closure, ShortestPaths) {
  DiffConstraints dc(3);
  dc.set(0, 1, 2);
  dc.set(1, 2, 3);
  auto c = closure(dc);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->get(0, 2), 5);
  EXPECT_EQ(c->get(2, 0), std::nullopt);
  dc.set(2, 0, -6);
  EXPECT_FALSE(closure(dc));
  dc.set(2, 0, -5);
  ASSERT_TRUE(closure(dc));
  EXPECT_EQ(closure(dc)->get(1, 0), -2);
  EXPECT_THROW(dc.set(1, 1, 0), std::invalid_argument);
  EXPECT_THROW(dc.set(3, 0, 0), std::out_of_range);
}

TEST(Closure, SameSetAndIdempotent) {
  Gen gen(31);
  for (int rep = 0; rep < 200; ++rep) {
    std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    DiffConstraints dc = gen.constraints(n, -3, 3, 30);
    auto c = closure(dc);
    std::size_t inside = 0;
    for (const IntVec& x : box_points(IntVec(n, -4), IntVec(n, 4))) {
      bool in = dc_contains(dc, x);
      inside += in;
      if (c) EXPECT_EQ(dc_contains(*c, x), in);
    }
    if (!c) {
      EXPECT_EQ(inside, 0u);
      continue;
    }
    EXPECT_EQ(closure(*c), c);
  }
}

TEST(Closure, PiConstraintsCutOutPi) {
  Gen gen(32);
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    IntVec x = gen.vec(n, -3, 3), y = gen.vec(n, -3, 3);
    DiffConstraints dc = pi_constraints(x, y);
    for (const IntVec& z : box_points(IntVec(n, -4), IntVec(n, 4))) EXPECT_EQ(dc_contains(dc, z), pi_contains(x, y, z));
  }
}

TEST(BoxTest, IndexIsRasterPosition) {
  Box b{{-1, 0, 2}, {1, 2, 3}};
  auto pts = b.points();
  ASSERT_EQ(pts.size(), b.size());
  EXPECT_EQ(b.size(), 18u);
  for (std::size_t k = 0; k < pts.size(); ++k) EXPECT_EQ(b.index(pts[k]), k);
  EXPECT_FALSE(b.contains({2, 0, 2}));
  EXPECT_FALSE(b.contains({0, 0}));
  EXPECT_EQ((Box{{1}, {0}}).size(), 0u);
}

TEST(LconvexSet, PiIsLconvexInEveryMode) {
  Gen gen(33);
  for (int rep = 0; rep < 30; ++rep) {
    IntVec x = gen.vec(3, -2, 2), y = gen.vec(3, -2, 2);
    auto member = [&](const IntVec& z) { return pi_contains(x, y, z); };
    Box w = Box::cube(3, -3, 3);
    for (SetMode m : {SetMode::pairs, SetMode::meetjoin, SetMode::midpoint}) {
      WindowReport r = check_lconvex_set_window(member, w, m);
      EXPECT_TRUE(r.ok) << to_string(m) << " " << r.detail;
      EXPECT_GT(r.checked, 0u);
    }
  }
}

TEST(LconvexSet, DiagonalPairFails) {
  std::set<IntVec> s{{0, 0}, {1, -1}};
  auto member = [&](const IntVec& z) { return s.count(z) > 0; };
  Box w = Box::cube(2, -2, 2);
  for (SetMode m : {SetMode::pairs, SetMode::meetjoin, SetMode::midpoint}) {
    WindowReport r = check_lconvex_set_window(member, w, m);
    EXPECT_FALSE(r.ok) << to_string(m);
    EXPECT_FALSE(r.witness.empty());
  }
}

TEST(WindowFuncTest, TabulatesAndGuards) {
  WindowFunc f(Box::cube(2, 0, 2), [](const IntVec& x) { return x[0] + 2 * x[1]; });
  EXPECT_EQ(f({2, 1}), 4);
  EXPECT_THROW(f({3, 0}), std::out_of_range);
  EXPECT_THROW(WindowFunc(Box::cube(1, -1, 0), [](const IntVec& x) { return x[0]; }), std::invalid_argument);
}

TEST(Llc, IndicatorOfPiPassesAllModes) {
  IntVec x{0, 1, -1}, y{2, 0, 1};
  WindowFunc f(Box::cube(3, -2, 2), [&](const IntVec& z) -> Int { return pi_contains(x, y, z) ? 3 : 0; });
  for (FuncMode m : {FuncMode::pairs, FuncMode::meetjoin, FuncMode::midpoint, FuncMode::parallelogram}) {
    WindowReport r = check_llog_concave_window(f, m);
    EXPECT_TRUE(r.ok) << to_string(m) << " " << r.detail;
  }
}

TEST(Llc, CounterexamplesAreCaught) {
  // 1D: (1, 0, 1) is not log-concave.
  WindowFunc g(Box::cube(1, 0, 2), [](const IntVec& x) -> Int { return x[0] == 1 ? 0 : 1; });
  EXPECT_FALSE(check_llog_concave_window(g, FuncMode::pairs).ok);
  EXPECT_FALSE(check_llog_concave_window(g, FuncMode::midpoint).ok);
  EXPECT_TRUE(check_llog_concave_window(g, FuncMode::meetjoin).ok);
  // 2D: mass on the anti-diagonal only.
  WindowFunc h(Box::cube(2, 0, 1), [](const IntVec& x) -> Int { return x[0] != x[1] ? 1 : 0; });
  WindowReport r = check_llog_concave_window(h, FuncMode::meetjoin);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness.size(), 4u);
  r = check_llog_concave_window(h, FuncMode::parallelogram);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.detail, "support not closed under meet/join");
  // Full support, parallelogram inequality broken with I = J.
  WindowFunc p(Box::cube(1, 0, 2), [](const IntVec& x) -> Int { return x[0] == 1 ? 1 : 2; });
  r = check_llog_concave_window(p, FuncMode::parallelogram);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness, (std::vector<IntVec>{{0}, {1}, {1}, {2}}));
  r = check_llog_concave_window(p, FuncMode::pairs);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness, (std::vector<IntVec>{{0}, {2}, {1}, {1}}));
}

TEST(Llc, ProductsDoNotOverflow) {
  // Functions of x_1 - x_0 are 1_n-invariant; concave in the difference
  // passes, convex fails. Products exceed 64 bits.
  Int big = Int{1} << 40;
  Box w = Box::cube(2, 0, 2);
  WindowFunc f(w, [&](const IntVec& x) -> Int { return big - std::abs(x[1] - x[0]); });
  EXPECT_TRUE(check_llog_concave_window(f, FuncMode::pairs).ok);
  EXPECT_TRUE(check_llog_concave_window(f, FuncMode::parallelogram).ok);
  WindowFunc g(w, [&](const IntVec& x) -> Int { return big + (x[1] - x[0]) * (x[1] - x[0]); });
  EXPECT_FALSE(check_llog_concave_window(g, FuncMode::pairs).ok);
  EXPECT_FALSE(check_llog_concave_window(g, FuncMode::parallelogram).ok);
}

TEST(Marginal, Examples) {
  DiffConstraints dc(2);
  dc.set(1, 0, 2);
  dc.set(0, 1, 0);
  EXPECT_EQ(marginal_count(dc, {5}), 3u);
  DiffConstraints open(2);
  open.set(1, 0, 2);
  EXPECT_THROW(marginal_count(open, {0}), InfiniteFiber);
  dc.set(1, 0, -1);
  EXPECT_EQ(marginal_count(dc, {0}), 0u);
  EXPECT_THROW(marginal_count(dc, {0, 0, 0}), LengthMismatch);
}

TEST(Marginal, MatchesBruteForce) {
  Gen gen(34);
  for (int rep = 0; rep < 150; ++rep) {
    DiffConstraints dc = finite_fiber_instance(gen, 2, 2);
    for (const IntVec& x : box_points(IntVec(2, -2), IntVec(2, 2)))
      EXPECT_EQ(marginal_count(dc, x), brute_marginal(dc, x, 12));
  }
}

TEST(Marginal, FiniteFiberCountsAreLlogConcave) {
  Gen gen(35);
  for (int rep = 0; rep < 100; ++rep) {
    DiffConstraints dc = finite_fiber_instance(gen, 2, 2);
    WindowFunc f(Box::cube(2, -4, 4), [&](const IntVec& x) { return static_cast<Int>(marginal_count(dc, x)); });
    for (FuncMode m : {FuncMode::pairs, FuncMode::parallelogram}) {
      WindowReport r = check_llog_concave_window(f, m);
      ASSERT_TRUE(r.ok) << to_string(m) << " " << r.detail << " " << to_json(dc).dump();
    }
  }
}

TEST(AhlswedeDaykin, ConstantWeights) {
  Gen gen(36);
  auto one = [](const IntVec&) { return Weight(1); };
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<IntVec> U, V;
    for (int k = 0; k < 1 + rep % 6; ++k) U.push_back(gen.vec(3, 0, 2));
    for (int k = 0; k < 1 + rep % 5; ++k) V.push_back(gen.vec(3, 0, 2));
    AdReport r = ad_check(one, one, one, one, U, V);
    EXPECT_TRUE(r.hypothesis_ok);
    EXPECT_TRUE(r.conclusion_checked);
    EXPECT_TRUE(r.conclusion_ok) << r.lhs << " " << r.rhs;
  }
}

TEST(AhlswedeDaykin, HypothesisImpliesConclusion) {
  Gen gen(37);
  int applied = 0;
  for (int rep = 0; rep < 400; ++rep) {
    // Log-supermodular weights 2^(x.y-style pairwise products) satisfy the
    // hypothesis with f1 = f2 = f3 = f4; random ones mostly do not.
    bool structured = gen.coin();
    std::vector<Weight> table(27);
    for (auto& w : table) w = Weight(gen.uniform(1, 4), gen.uniform(1, 3));
    auto idx = [](const IntVec& x) { return static_cast<std::size_t>(x[0] * 9 + x[1] * 3 + x[2]); };
    std::function<Weight(const IntVec&)> f = [&](const IntVec& x) {
      if (!structured) return table[idx(x)];
      Weight w = 1;
      Int e = x[0] * x[1] + x[1] * x[2];
      for (Int k = 0; k < e; ++k) w *= 2;
      return w;
    };
    std::vector<IntVec> U, V;
    for (int k = 0; k < 4; ++k) U.push_back(gen.vec(3, 0, 2));
    for (int k = 0; k < 4; ++k) V.push_back(gen.vec(3, 0, 2));
    AdReport r = ad_check(f, f, f, f, U, V);
    if (structured) EXPECT_TRUE(r.hypothesis_ok);
    if (!r.hypothesis_ok) {
      EXPECT_EQ(r.hypothesis_witness.size(), 2u);
      EXPECT_FALSE(r.conclusion_checked);
      continue;
    }
    ++applied;
    EXPECT_TRUE(r.conclusion_ok) << r.lhs << " " << r.rhs;
  }
  EXPECT_GT(applied, 100);
}
