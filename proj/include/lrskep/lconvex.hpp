#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrskep/core.hpp"

namespace lrskep {

// Bounds x_i - x_j <= c_ij, with nullopt meaning +infinity.
class DiffConstraints {
 public:
  DiffConstraints() = default;
  explicit DiffConstraints(std::size_t n) : n_(n), c_(n * n) {
    for (std::size_t i = 0; i < n; ++i) c_[i * n + i] = 0;
  }

  std::size_t n() const { return n_; }
  std::optional<Int> get(std::size_t i, std::size_t j) const { return c_.at(i * n_ + j); }
  void set(std::size_t i, std::size_t j, std::optional<Int> c);
  // Tightens: keeps the smaller of the current and the new bound.
  void tighten(std::size_t i, std::size_t j, Int c);

  friend bool operator==(const DiffConstraints&, const DiffConstraints&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::optional<Int>> c_;
};

// Shortest-path closure; nullopt when the set is empty (negative cycle).
std::optional<DiffConstraints> closure(const DiffConstraints& dc);
bool dc_contains(const DiffConstraints& dc, const IntVec& x);
// The bounds max(x_i - x_j, y_i - y_j) that cut out Pi(x,y).
DiffConstraints pi_constraints(const IntVec& x, const IntVec& y);

struct Box {
  IntVec lo;
  IntVec hi;

  std::size_t dim() const { return lo.size(); }
  bool contains(const IntVec& x) const;
  std::size_t size() const;
  std::size_t index(const IntVec& x) const;
  std::vector<IntVec> points() const { return box_points(lo, hi); }
  static Box cube(std::size_t n, Int lo, Int hi) { return {IntVec(n, lo), IntVec(n, hi)}; }
};

enum class SetMode { pairs, meetjoin, midpoint };
enum class FuncMode { pairs, meetjoin, midpoint, parallelogram };

const char* to_string(SetMode m);
const char* to_string(FuncMode m);

struct WindowReport {
  bool ok = true;
  std::uint64_t checked = 0;
  // For a violation: the participating points, in the order of the condition
  // (x, y, x', y') or (x, x+e_I, x+e_J, x+e_I+e_J).
  std::vector<IntVec> witness;
  std::string detail;
};

// Instances are checked only when all of their points lie in the window.
WindowReport check_lconvex_set_window(const std::function<bool(const IntVec&)>& member,
                                      const Box& window, SetMode mode);

// A nonnegative integer-valued function tabulated on a box.
class WindowFunc {
 public:
  WindowFunc(Box window, const std::function<Int(const IntVec&)>& f);

  const Box& window() const { return window_; }
  Int operator()(const IntVec& x) const;
  bool contains(const IntVec& x) const { return window_.contains(x); }

 private:
  Box window_;
  std::vector<Int> values_;
};

// Products are compared exactly. parallelogram mode also checks that the
// support is closed under meet and join.
WindowReport check_llog_concave_window(const WindowFunc& f, FuncMode mode);

class InfiniteFiber : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// #{y : (x, y) in K} for K given by constraints on the first x.size() + N
// coordinates.
std::uint64_t marginal_count(const DiffConstraints& dc, const IntVec& x);

using Weight = boost::multiprecision::cpp_rational;

struct AdReport {
  bool hypothesis_ok = true;
  std::vector<IntVec> hypothesis_witness;  // (u, v) of the first failure
  bool conclusion_checked = false;
  bool conclusion_ok = true;
  Weight lhs = 0;
  Weight rhs = 0;
};

// Checks f1(u) f2(v) <= f3(u meet v) f4(u join v) on U x V, then, when that
// holds, (sum_U f1)(sum_V f2) <= (sum_{U meet V} f3)(sum_{U join V} f4).
AdReport ad_check(const std::function<Weight(const IntVec&)>& f1,
                  const std::function<Weight(const IntVec&)>& f2,
                  const std::function<Weight(const IntVec&)>& f3,
                  const std::function<Weight(const IntVec&)>& f4, const std::vector<IntVec>& U,
                  const std::vector<IntVec>& V);

}  // namespace lrskep
