#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lrskep/core.hpp"
#include "lrskep/grid.hpp"

namespace lrskep::detail {

class Unbounded : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Backtracking over integer assignments of a grid's free points, subject to
// inequalities sum(pos) >= sum(neg). Free points are assigned in the given
// order. Each inequality is checked once, at the position of its last free
// point, where it yields a bound on that point. Static bounds (valid
// consequences of the system) keep every domain finite.
class GridSearch {
 public:
  GridSearch(TriGrid start, std::vector<Point> order, const std::vector<GridInequality>& ineqs,
             std::vector<std::optional<Int>> static_lo, std::vector<std::optional<Int>> static_hi)
      : grid_(std::move(start)),
        order_(std::move(order)),
        lo_(std::move(static_lo)),
        hi_(std::move(static_hi)),
        ready_(order_.size()) {
    int n = grid_.n();
    std::vector<int> pos_of(tri_size(n), -1);
    for (std::size_t k = 0; k < order_.size(); ++k) pos_of[tri_index(n, order_[k].i, order_[k].j)] = static_cast<int>(k);
    for (const GridInequality& q : ineqs) {
      Compiled c;
      int last = -1;
      auto add = [&](const Point& p, Int coef) {
        std::size_t idx = tri_index(n, p.i, p.j);
        c.terms.push_back({idx, coef});
        last = std::max(last, pos_of[idx]);
      };
      for (const Point& p : q.pos) add(p, 1);
      for (const Point& p : q.neg) add(p, -1);
      if (last < 0) {
        fixed_.push_back(std::move(c));
        continue;
      }
      c.var = tri_index(n, order_[last].i, order_[last].j);
      c.coef = 0;
      std::vector<Term> rest;
      for (const Term& t : c.terms) {
        if (t.idx == c.var)
          c.coef += t.coef;
        else
          rest.push_back(t);
      }
      c.terms = std::move(rest);
      ready_[last].push_back(std::move(c));
    }
  }

  // Calls visit(grid) for every solution, in lexicographic order of the free
  // values along the assignment order.
  template <class Visit>
  void for_each(Visit&& visit) {
    for (const Compiled& c : fixed_)
      if (eval(c) < 0) return;
    rec(0, visit);
  }

  std::uint64_t count() {
    std::uint64_t total = 0;
    for_each([&](const TriGrid&) { ++total; });
    return total;
  }

 private:
  struct Term {
    std::size_t idx;
    Int coef;
  };
  struct Compiled {
    std::vector<Term> terms;  // excludes var
    std::size_t var = 0;
    Int coef = 0;  // coefficient of var
  };

  Int eval(const Compiled& c) const {
    Int s = 0;
    for (const Term& t : c.terms) s = checked_add(s, checked_mul(t.coef, grid_.raw()[t.idx]));
    return s;
  }

  template <class Visit>
  void rec(std::size_t k, Visit& visit) {
    if (k == order_.size()) {
      visit(static_cast<const TriGrid&>(grid_));
      return;
    }
    std::optional<Int> lo = lo_[k], hi = hi_[k];
    for (const Compiled& c : ready_[k]) {
      Int rest = eval(c);
      // coef * v + rest >= 0
      if (c.coef == 0) {
        if (rest < 0) return;
      } else if (c.coef > 0) {
        Int b = ceil_div(checked_neg(rest), c.coef);
        if (!lo || b > *lo) lo = b;
      } else {
        Int b = floor_div(rest, checked_neg(c.coef));
        if (!hi || b < *hi) hi = b;
      }
    }
    if (!lo || !hi) {
      throw Unbounded("free point (" + std::to_string(order_[k].i) + "," + std::to_string(order_[k].j) +
                      ") has no finite interval");
    }
    Int& slot = grid_.raw()[tri_index(grid_.n(), order_[k].i, order_[k].j)];
    for (Int v = *lo; v <= *hi; ++v) {
      slot = v;
      rec(k + 1, visit);
    }
    slot = 0;
  }

  static Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
  static Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

  TriGrid grid_;
  std::vector<Point> order_;
  std::vector<std::optional<Int>> lo_, hi_;
  std::vector<std::vector<Compiled>> ready_;
  std::vector<Compiled> fixed_;
};

}  // namespace lrskep::detail
