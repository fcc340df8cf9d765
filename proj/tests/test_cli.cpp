#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "lrskep/io.hpp"
#include "support.hpp"

using namespace lrskep;
using lrskep::testing::fixture;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("lrskep_cli_" + name)).string();
}

}  // namespace

TEST(Cli, LrAllModels) {
  for (std::string m : {"hive", "skep", "sum", "oracle"}) {
    Result r = run({"lr", "--lam", "4,2,1,0", "--mu", "3,1,0,0", "--nu", "5,3,2,1", "--model", m});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, R"({"coefficient":3,"lam":[4,2,1,0],"model":")" + m + R"(","mu":[3,1,0,0],"nu":[5,3,2,1]})" "\n");
  }
  Result t = run({"--format", "table", "lr", "--lam", "2,1,0", "--mu", "2,1,0", "--nu", "3,2,1"});
  EXPECT_EQ(t.out, "2\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"lr", "--lam", "2,1"}).code, 2);
  Result bad = run({"lr", "--lam", "x", "--mu", "1", "--nu", "1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"lr", "--lam", "0,1", "--mu", "1,0", "--nu", "1,0"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "lr", "--lam", "1", "--mu", "1", "--nu", "2"}).code, 2);
  EXPECT_EQ(run({"oct", "flip", "--in", fixture("hive_ex1.json")}).code, 2);
  EXPECT_EQ(run({"oct", "hive2skep", "--in", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"verify", "lpp", "--lam", "2,1", "--mu", "2,1", "--lam2", "2,2", "--mu2", "2,0"}).code, 2);
  Result help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("Usage"), std::string::npos);
}

TEST(Cli, FailedReportsExitOne) {
  VerifyReport ok, bad, exp;
  bad.status = Status::fail;
  exp.status = Status::fail;
  exp.experimental = true;
  std::ostringstream out;
  EXPECT_EQ(cli::write_reports({ok, exp}, true, out), 0);
  EXPECT_EQ(cli::write_reports({ok, bad}, false, out), 1);
  EXPECT_EQ(lines(out.str()).size(), 4u);
}

TEST(Cli, OctIsByteIdenticalToFixtures) {
  Result s = run({"oct", "hive2skep", "--in", fixture("hive_ex1.json")});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.out, read_file(fixture("skep_ex1.json")));
  Result h = run({"oct", "skep2hive", "--in", fixture("skep_ex1.json")});
  EXPECT_EQ(h.out, read_file(fixture("hive_ex1.json")));
  Result f = run({"oct", "flip", "--kind", "hive", "--in", fixture("hive_ex1.json")});
  EXPECT_EQ(f.out, read_file(fixture("hive_flip_ex1.json")));
  std::string path = temp_path("skep.json");
  Result w = run({"oct", "hive2skep", "--in", fixture("hive_ex1.json"), "--out", path});
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(read_file(path), read_file(fixture("skep_ex1.json")));
  std::remove(path.c_str());
  Result t = run({"--format", "table", "oct", "hive2skep", "--in", fixture("hive_ex1.json")});
  EXPECT_EQ(t.out, "11\n11,10\n11,10,8\n11,9,8,5\n10,9,7,4,0\n");
}

TEST(Cli, PiAndCovers) {
  Result p = run({"pi", "--x", "0,0,0,0", "--y", "0,3,5,8"});
  EXPECT_EQ(p.code, 0);
  Json j = parse_json(p.out);
  EXPECT_EQ(j["size"], 48);
  EXPECT_EQ(j["distances"], Json({3, 2, 3}));
  EXPECT_EQ(lines(run({"pi", "--x", "0,0,0,0", "--y", "0,3,5,8", "--enumerate"}).out).size(), 48u);
  EXPECT_EQ(lines(run({"pi", "--x", "0,0,0,0", "--y", "0,2,3,5", "--enumerate"}).out).size(), 18u);
  Result c = run({"covers", "--lam", "1,1,1,1", "--mu", "1,2,3,4"});
  EXPECT_EQ(c.code, 0);
  bool found = false;
  for (const std::string& l : lines(c.out)) found = found || l == R"({"lam":[2,2,3,3],"mu":[0,1,1,2]})";
  EXPECT_TRUE(found) << c.out;
}

TEST(Cli, EnumerateAndSkepext) {
  Result e = run({"enumerate", "hives", "--lam", "4,2,1,0", "--mu", "3,1,0,0", "--nu", "5,3,2,1"});
  EXPECT_EQ(e.code, 0) << e.err;
  Json hs = parse_json(e.out);
  ASSERT_TRUE(hs.is_array());
  EXPECT_EQ(hs.size(), 3u);
  bool has_example = false;
  for (const Json& h : hs) has_example = has_example || trigrid_from_json(h) == lrskep::testing::example_hive();
  EXPECT_TRUE(has_example);
  Result s = run({"enumerate", "skeps", "--lam", "2,1,0", "--mu", "2,1,0", "--nu", "3,2,1"});
  EXPECT_EQ(parse_json(s.out).size(), 2u);
  Result x = run({"skepext", "--gplus", fixture("gplus_ex1.json"), "--lam", "4,2,1,0"});
  EXPECT_EQ(x.code, 0) << x.err;
  EXPECT_EQ(parse_json(x.out)["count"], 1);
}

TEST(Cli, VerifyCampaigns) {
  auto check = [](std::vector<std::string> args, const std::string& name) {
    Result r = run(args);
    EXPECT_EQ(r.code, 0) << r.err << r.out;
    auto ls = lines(r.out);
    ASSERT_FALSE(ls.empty());
    for (const std::string& l : ls) {
      Json j = parse_json(l);
      EXPECT_EQ(j["check"], name);
      EXPECT_NE(j["status"], "fail") << l;
    }
  };
  check({"verify", "lpp", "--lam", "1,0", "--mu", "1,1", "--lam2", "0,0", "--mu2", "2,1"}, "lpp");
  check({"verify", "sweep-lpp", "--n", "2", "--max-entry", "2"}, "sweep-lpp");
  check({"verify", "counts", "--n", "2", "--max-entry", "2", "--jobs", "2"}, "counts");
  check({"verify", "commutative", "--gplus", fixture("gplus_ex1.json")}, "commutative");
  check({"verify", "commutative", "--n", "2", "--max-entry", "2"}, "skep-theorems");
  check({"verify", "better-lpp", "--gplus", fixture("gplus_ex1.json"), "--lam", "4,2,1,0", "--lam2", "3,1,0,0"},
        "better-lpp");
  check({"verify", "skepext-llc", "--sample", "3", "--n", "2", "--max-entry", "2", "--lo", "0", "--hi", "3"},
        "skepext-llc");
  check({"verify", "covers", "--lam", "1,1,1,1", "--mu", "1,2,3,4"}, "covers");
  Result p = run({"verify", "probe-question", "--pi", "4,2,0", "--nu", "3,2,1"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(parse_json(p.out)["experimental"], true);
  Result t = run({"--format", "table", "verify", "covers", "--lam", "0,0,0", "--mu", "0,2,9"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out.rfind("covers\tskipped", 0), 0u) << t.out;
}

TEST(Cli, SeedChangesSamplesDeterministically) {
  std::vector<std::string> a{"--seed", "5", "verify", "skepext-llc", "--sample", "2", "--n", "2", "--max-entry", "2"};
  EXPECT_EQ(run(a).out, run(a).out);
}
