#include "lrskep/grid.hpp"

#include <stdexcept>

namespace lrskep {

bool in_triangle(int n, int i, int j) { return i >= 0 && j >= 0 && i + j <= n; }

Parity parity(int i, int j, int n) {
  if (!in_triangle(n, i, j)) {
    throw std::out_of_range("point (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside triangle of side " + std::to_string(n));
  }
  return ((i + j - n) % 2 == 0) ? Parity::plus : Parity::minus;
}

int epsilon(int i, int j, int n) { return parity(i, j, n) == Parity::plus ? 0 : 1; }

std::size_t tri_size(int n) {
  if (n < 0) throw std::invalid_argument("negative side length");
  return static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

std::size_t tri_index(int n, int i, int j) {
  // Row j starts after rows 0..j-1, of lengths n+1, n, ..., n-j+2.
  std::size_t jj = static_cast<std::size_t>(j);
  return jj * static_cast<std::size_t>(n + 1) - jj * (jj - 1) / 2 + static_cast<std::size_t>(i);
}

std::vector<Point> tri_points(int n) {
  std::vector<Point> out;
  out.reserve(tri_size(n));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i + j <= n; ++i) out.push_back({i, j});
  return out;
}

std::vector<Point> tri_points(int n, Parity p) {
  std::vector<Point> out;
  for (const Point& q : tri_points(n))
    if (parity(q.i, q.j, n) == p) out.push_back(q);
  return out;
}

std::vector<Point> corner_path(int n) {
  std::vector<Point> out;
  out.reserve(2 * static_cast<std::size_t>(n) + 1);
  for (int i = n; i >= 0; --i) out.push_back({i, 0});
  for (int j = 1; j <= n; ++j) out.push_back({0, j});
  return out;
}

TriGrid::TriGrid(int n) : n_(n), v_(tri_size(n), 0) {}

TriGrid TriGrid::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) throw std::invalid_argument("grid needs at least one row");
  int n = static_cast<int>(rows.size()) - 1;
  TriGrid g(n);
  for (int j = 0; j <= n; ++j) {
    if (rows[j].size() != static_cast<std::size_t>(n - j + 1)) {
      throw std::invalid_argument("row " + std::to_string(j) + " has length " +
                                  std::to_string(rows[j].size()) + ", expected " +
                                  std::to_string(n - j + 1));
    }
    for (int i = 0; i + j <= n; ++i) g.v_[tri_index(n, i, j)] = rows[j][i];
  }
  return g;
}

Int TriGrid::at(int i, int j) const {
  if (!contains(i, j)) throw std::out_of_range("point outside grid");
  return (*this)(i, j);
}

void TriGrid::set(int i, int j, Int v) {
  if (!contains(i, j)) throw std::out_of_range("point outside grid");
  v_[tri_index(n_, i, j)] = v;
}

std::vector<std::vector<Int>> TriGrid::rows() const {
  std::vector<std::vector<Int>> out(n_ + 1);
  for (int j = 0; j <= n_; ++j)
    for (int i = 0; i + j <= n_; ++i) out[j].push_back((*this)(i, j));
  return out;
}

SplitGrid split(const TriGrid& g) {
  SplitGrid s{PlusGrid(g.n()), MinusGrid(g.n())};
  for (const Point& p : tri_points(g.n())) {
    if (parity(p.i, p.j, g.n()) == Parity::plus)
      s.plus.set(p.i, p.j, g(p));
    else
      s.minus.set(p.i, p.j, g(p));
  }
  return s;
}

TriGrid interweave(const PlusGrid& gp, const MinusGrid& gm) {
  if (gp.n() != gm.n()) throw std::invalid_argument("interweave: side lengths differ");
  TriGrid g(gp.n());
  for (const Point& p : tri_points(g.n())) {
    g.set(p.i, p.j, parity(p.i, p.j, g.n()) == Parity::plus ? gp(p) : gm(p));
  }
  return g;
}

TriGrid normalized(const TriGrid& g) {
  TriGrid r = g;
  Int base = g(g.n(), 0);
  for (Int& v : r.raw()) v = checked_sub(v, base);
  return r;
}

PlusGrid normalized(const PlusGrid& g) {
  PlusGrid r(g.n());
  Int base = g(g.n(), 0);
  for (const Point& p : g.points()) r.set(p.i, p.j, checked_sub(g(p), base));
  return r;
}

IntVec boundary_corner(const TriGrid& g) {
  std::vector<Point> path = corner_path(g.n());
  IntVec z(2 * static_cast<std::size_t>(g.n()));
  for (std::size_t k = 1; k < path.size(); ++k) z[k - 1] = checked_sub(g(path[k]), g(path[k - 1]));
  return z;
}

namespace {

template <class G>
IntVec diag_of(const G& g) {
  int n = g.n();
  IntVec d(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) d[k - 1] = checked_sub(g(n - k, k), g(n - k + 1, k - 1));
  return d;
}

}  // namespace

IntVec boundary_diag(const TriGrid& g) { return diag_of(g); }
IntVec boundary_diag(const PlusGrid& g) { return diag_of(g); }

std::string Violation::describe() const {
  return "family " + std::to_string(family) + " at (" + std::to_string(at.i) + "," +
         std::to_string(at.j) + "): " + std::to_string(lhs) + " < " + std::to_string(rhs);
}

Validity check_inequalities(const TriGrid& g, const std::vector<GridInequality>& ineqs) {
  for (const GridInequality& q : ineqs) {
    Int lhs = 0, rhs = 0;
    for (const Point& p : q.pos) lhs = checked_add(lhs, g(p));
    for (const Point& p : q.neg) rhs = checked_add(rhs, g(p));
    if (lhs < rhs) return Validity{false, Violation{q.family, q.at, lhs, rhs}};
  }
  return Validity{};
}

}  // namespace lrskep
