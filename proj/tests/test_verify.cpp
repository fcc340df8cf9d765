#include <gtest/gtest.h>

#include "lrskep/lattice.hpp"
#include "lrskep/skep.hpp"
#include "lrskep/verify.hpp"
#include "support.hpp"

using namespace lrskep;

namespace {

PlusGrid example_gplus() { return split(lrskep::testing::example_skep()).plus; }

}  // namespace

TEST(Report, Serialization) {
  VerifyReport r;
  r.check = "lpp";
  r.instance = "lam=1,0";
  r.checked = 3;
  EXPECT_EQ(to_json_line(r),
            R"({"check":"lpp","checked":3,"detail":"","experimental":false,"instance":"lam=1,0","status":"pass","witness":null})");
  EXPECT_EQ(to_table_line(r), "lpp\tpass\tchecked=3\tlam=1,0");
  r.status = Status::fail;
  r.experimental = true;
  EXPECT_FALSE(r.failed());
  r.experimental = false;
  EXPECT_TRUE(r.failed());
  EXPECT_STREQ(to_string(Status::skipped), "skipped");
}

TEST(Lpp, SingleComparisons) {
  VerifyReport r = verify_lpp({2, 0}, {0, 0}, {1, 0}, {1, 0});
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_GT(r.checked, 0u);
  // lam2 is in Pi(lam, mu) but not in Pi of the zero-padded pair.
  r = verify_lpp({1, 0}, {1, 1}, {0, 0}, {2, 1});
  EXPECT_EQ(r.status, Status::pass) << r.detail;
  EXPECT_THROW(verify_lpp({2, 1}, {2, 1}, {2, 2}, {2, 0}), Incomparable);
  EXPECT_THROW(verify_lpp({2, 1}, {2, 1}, {3, 1}, {2, 1}), Incomparable);
  EXPECT_THROW(verify_lpp({0, 1}, {2, 1}, {0, 1}, {2, 1}), std::invalid_argument);
}

TEST(Lpp, ComparablePartitions) {
  // Pi(x, x) is the line x + Z 1_n; three of its points split 42 into partitions.
  EXPECT_EQ(comparable_partitions({2, 1}, {2, 1}), (std::vector<IntVec>{{1, 0}, {2, 1}, {3, 2}}));
  auto c = comparable_partitions({2, 0, 0}, {2, 2, 0});
  EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
  for (const IntVec& l : c) {
    EXPECT_TRUE(is_partition(l));
    EXPECT_TRUE(is_partition(IntVec{4, 2, 0} - l));
    EXPECT_TRUE(pi_contains({2, 0, 0}, {2, 2, 0}, l));
  }
  EXPECT_NE(std::find(c.begin(), c.end(), IntVec{2, 0, 0}), c.end());
  EXPECT_NE(std::find(c.begin(), c.end(), IntVec{2, 2, 0}), c.end());
  EXPECT_NE(std::find(c.begin(), c.end(), IntVec{2, 1, 0}), c.end());
}

TEST(Lpp, SmallSweepIsThreadIndependent) {
  VerifyReport a = sweep_lpp(2, 2, 1), b = sweep_lpp(2, 2, 3);
  EXPECT_EQ(a.status, Status::pass) << a.detail;
  EXPECT_EQ(to_json_line(a), to_json_line(b));
  EXPECT_GT(a.checked, 0u);
}

TEST(SkepTheorems, ExamplePlusHalf) {
  PlusGrid gp = example_gplus();
  VerifyReport r = verify_skep_commutative(gp);
  EXPECT_EQ(r.status, Status::pass) << r.detail;
  EXPECT_EQ(r.checked, default_commutative_window(gp).size());
  for (const IntVec& l2 : comparable_partitions({4, 2, 1, 0}, {3, 1, 0, 0})) {
    VerifyReport b = verify_better_lpp(gp, {4, 2, 1, 0}, l2);
    EXPECT_EQ(b.status, Status::pass) << b.detail;
  }
  EXPECT_THROW(verify_better_lpp(gp, {4, 2, 1, 0}, {7, 3, 1, 1}), Incomparable);
  VerifyReport l = verify_skepext_llc(gp, Box::cube(4, 0, 3));
  EXPECT_EQ(l.status, Status::pass) << l.detail;
}

TEST(SkepTheorems, SmallSweep) {
  VerifyReport r = sweep_skep_theorems(2, 3, 2);
  EXPECT_EQ(r.status, Status::pass) << r.detail;
  EXPECT_GT(r.checked, 0u);
}

TEST(Sweeps, CountsAgree) {
  VerifyReport r = cross_check_counts(2, 3, 2);
  EXPECT_EQ(r.status, Status::pass) << r.detail;
  EXPECT_EQ(to_json_line(r), to_json_line(cross_check_counts(2, 3, 1)));
}

TEST(Sweeps, GplusSampling) {
  auto all = gplus_sweep(2, 2);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  auto s1 = sample_gplus(2, 2, 5, 9), s2 = sample_gplus(2, 2, 5, 9);
  EXPECT_EQ(s1, s2);
  EXPECT_EQ(s1.size(), std::min<std::size_t>(5, all.size()));
  for (const PlusGrid& gp : s1) EXPECT_TRUE(std::binary_search(all.begin(), all.end(), gp));
  EXPECT_EQ(sample_gplus(2, 2, 100000, 1).size(), all.size());
}

TEST(Covers, Sandwich) {
  EXPECT_EQ(verify_covers({0, 0, 0}, {0, 2, 4}, 8).status, Status::pass);
  EXPECT_EQ(verify_covers({1, 1, 1, 1}, {1, 2, 3, 4}, 8).status, Status::pass);
  VerifyReport s = verify_covers({0, 0, 0}, {0, 2, 9}, 8);
  EXPECT_EQ(s.status, Status::skipped);
  EXPECT_FALSE(s.failed());
}

TEST(Probe, IsExperimental) {
  VerifyReport r = probe_question({4, 2, 0}, {3, 2, 1}, Box::cube(3, 0, 4));
  EXPECT_TRUE(r.experimental);
  EXPECT_FALSE(r.failed());
  EXPECT_GT(r.checked, 0u);
}
