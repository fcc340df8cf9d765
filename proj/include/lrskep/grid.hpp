#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrskep/core.hpp"

namespace lrskep {

// Points of the triangle Delta_n = {(i,j) >= 0 : i + j <= n}. (0,0) is the
// lower-left corner, (n,0) lower-right, (0,n) upper-left.
struct Point {
  int i = 0;
  int j = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Parity { plus, minus };

bool in_triangle(int n, int i, int j);
// plus iff i + j == n mod 2. Throws std::out_of_range outside Delta_n.
Parity parity(int i, int j, int n);
// 0 on the plus class, 1 on the minus class.
int epsilon(int i, int j, int n);

std::size_t tri_size(int n);
std::size_t tri_index(int n, int i, int j);
// Raster order: j ascending, then i ascending.
std::vector<Point> tri_points(int n);
std::vector<Point> tri_points(int n, Parity p);

// p_0 = (n,0), ..., p_n = (0,0), ..., p_{2n} = (0,n).
std::vector<Point> corner_path(int n);

class TriGrid {
 public:
  TriGrid() = default;
  explicit TriGrid(int n);
  // rows[j] holds g_{0j} ... g_{(n-j)j}.
  static TriGrid from_rows(const std::vector<std::vector<Int>>& rows);

  int n() const { return n_; }
  bool contains(int i, int j) const { return in_triangle(n_, i, j); }
  Int at(int i, int j) const;
  void set(int i, int j, Int v);
  Int operator()(int i, int j) const { return v_[tri_index(n_, i, j)]; }
  Int operator()(Point p) const { return (*this)(p.i, p.j); }

  std::vector<std::vector<Int>> rows() const;
  const std::vector<Int>& raw() const { return v_; }
  std::vector<Int>& raw() { return v_; }

  friend bool operator==(const TriGrid&, const TriGrid&) = default;
  friend auto operator<=>(const TriGrid& a, const TriGrid& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.v_ <=> b.v_;
  }

 private:
  int n_ = 0;
  std::vector<Int> v_{0};
};

// A function on one parity class of Delta_n. Storage is indexed like
// TriGrid; entries of the other class are kept at zero and never exposed.
template <Parity P>
class HalfGrid {
 public:
  static constexpr Parity kParity = P;

  HalfGrid() : HalfGrid(0) {}
  explicit HalfGrid(int n) : n_(n), v_(tri_size(n), 0) {}

  int n() const { return n_; }
  bool contains(int i, int j) const {
    return in_triangle(n_, i, j) && parity(i, j, n_) == P;
  }
  Int at(int i, int j) const {
    check(i, j);
    return v_[tri_index(n_, i, j)];
  }
  void set(int i, int j, Int v) {
    check(i, j);
    v_[tri_index(n_, i, j)] = v;
  }
  Int operator()(int i, int j) const { return v_[tri_index(n_, i, j)]; }
  Int operator()(Point p) const { return (*this)(p.i, p.j); }
  std::vector<Point> points() const { return tri_points(n_, P); }

  friend bool operator==(const HalfGrid&, const HalfGrid&) = default;
  friend auto operator<=>(const HalfGrid& a, const HalfGrid& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.v_ <=> b.v_;
  }

 private:
  void check(int i, int j) const {
    if (!contains(i, j)) throw std::out_of_range("point not in parity class");
  }
  int n_;
  std::vector<Int> v_;
};

using PlusGrid = HalfGrid<Parity::plus>;
using MinusGrid = HalfGrid<Parity::minus>;

struct SplitGrid {
  PlusGrid plus;
  MinusGrid minus;
};

SplitGrid split(const TriGrid& g);
TriGrid interweave(const PlusGrid& gp, const MinusGrid& gm);

// Subtracts g_{n0} from every entry.
TriGrid normalized(const TriGrid& g);
PlusGrid normalized(const PlusGrid& g);

// (g(p_1) - g(p_0), ..., g(p_{2n}) - g(p_{2n-1})) along the corner path.
IntVec boundary_corner(const TriGrid& g);
// (g_{(n-1)1} - g_{n0}, ..., g_{0n} - g_{1(n-1)}).
IntVec boundary_diag(const TriGrid& g);
IntVec boundary_diag(const PlusGrid& g);

// A linear inequality sum(pos) >= sum(neg) over grid points, tagged with the
// family it belongs to and its anchor point.
struct GridInequality {
  int family = 0;
  Point at;
  std::vector<Point> pos;
  std::vector<Point> neg;
};

// The first violated instance, with both sides evaluated.
struct Violation {
  int family = 0;
  Point at;
  Int lhs = 0;
  Int rhs = 0;
  std::string describe() const;
};

struct Validity {
  bool ok = true;
  std::optional<Violation> witness;
  explicit operator bool() const { return ok; }
};

Validity check_inequalities(const TriGrid& g,
                            const std::vector<GridInequality>& ineqs);

}  // namespace lrskep
