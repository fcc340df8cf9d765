#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lrskep/core.hpp"
#include "lrskep/grid.hpp"
#include "lrskep/hive.hpp"
#include "lrskep/io.hpp"
#include "lrskep/lattice.hpp"
#include "lrskep/lconvex.hpp"
#include "lrskep/oracle.hpp"

namespace lrskep::testing {

inline std::string fixture(const std::string& name) { return std::string(LRSKEP_FIXTURE_DIR) + "/" + name; }

inline TriGrid example_skep() { return TriGrid::from_rows({{10, 9, 7, 4, 0}, {11, 9, 8, 5}, {11, 10, 8}, {11, 10}, {11}}); }
inline TriGrid example_hive() { return TriGrid::from_rows({{7, 7, 6, 4, 0}, {10, 10, 8, 5}, {11, 10, 8}, {11, 10}, {11}}); }
inline TriGrid example_hive_flipped() { return TriGrid::from_rows({{4, 4, 4, 3, 0}, {8, 8, 7, 5}, {10, 9, 8}, {11, 10}, {11}}); }

// Hand-rolled generators over a seeded mt19937_64.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform(0, static_cast<Int>(size) - 1)); }

  IntVec vec(std::size_t n, Int lo, Int hi) {
    IntVec v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  IntVec partition(std::size_t n, Int max_entry) {
    IntVec v = vec(n, 0, max_entry);
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }

  TriGrid grid(int n, Int lo, Int hi) {
    TriGrid g(n);
    for (auto& x : g.raw()) x = uniform(lo, hi);
    return g;
  }

  // A uniformly chosen hive among those with a random nonzero boundary.
  TriGrid hive(int n, Int max_entry) {
    while (true) {
      IntVec lam = partition(static_cast<std::size_t>(n), max_entry);
      IntVec mu = partition(static_cast<std::size_t>(n), max_entry);
      std::vector<IntVec> nus;
      SchurExpansion prod = schur_product(lam, mu);
      for (const auto& [nu, c] : prod.terms())
        if (nu.size() <= static_cast<std::size_t>(n)) nus.push_back(pad(nu, static_cast<std::size_t>(n) - nu.size()));
      if (nus.empty()) continue;
      std::vector<TriGrid> hs = enumerate_hives(lam, mu, nus[index(nus.size())]);
      if (!hs.empty()) return hs[index(hs.size())];
    }
  }

  DiffConstraints constraints(std::size_t n, Int lo, Int hi, int inf_percent) {
    DiffConstraints dc(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && uniform(0, 99) >= inf_percent) dc.set(i, j, uniform(lo, hi));
    return dc;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// a = s21 at 0000 and 0235, b = 2s3 + 2s111 at 0011 and 0224, and
// c = 2s3 + 4s21 + 2s111 on the other 14 classes of Pi(0000, 0235).
inline SchurFunc two_not_one_example() {
  SchurExpansion a = SchurExpansion::schur({2, 1});
  SchurExpansion b = SchurExpansion::schur({3}, 2) + SchurExpansion::schur({1, 1, 1}, 2);
  SchurExpansion c = b + SchurExpansion::schur({2, 1}, 4);
  SchurFunc f(4);
  for (const IntVec& z : pi_enumerate({0, 0, 0, 0}, {0, 2, 3, 5})) f.set(z, c);
  f.set({0, 0, 0, 0}, a);
  f.set({0, 2, 3, 5}, a);
  f.set({0, 0, 1, 1}, b);
  f.set({0, 2, 2, 4}, b);
  return f;
}

}  // namespace lrskep::testing
