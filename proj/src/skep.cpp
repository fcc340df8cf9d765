#include "lrskep/skep.hpp"

#include <algorithm>

#include "lrskep/detail/search.hpp"

namespace lrskep {

namespace {

bool all_in(int n, const Point* f, int k) {
  for (int r = 0; r < k; ++r)
    if (!in_triangle(n, f[r].i, f[r].j)) return false;
  return true;
}

// Every NW difference g(i-1,j+1) - g(i,j) of a skep lies between the
// smallest and largest diagonal boundary entry (the differences interlace
// row by row). Summing along the NW line from (i+j,0) bounds g(i,j).
template <class G>
void nw_bounds(const G& g, const IntVec& nu, const std::vector<Point>& order,
               std::vector<std::optional<Int>>& lo, std::vector<std::optional<Int>>& hi) {
  if (nu.empty()) return;
  Int dmin = nu.min(), dmax = nu.max();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Point& p = order[k];
    Int base = g(p.i + p.j, 0);
    Int l = checked_add(base, checked_mul(p.j, dmin));
    Int h = checked_add(base, checked_mul(p.j, dmax));
    lo[k] = lo[k] ? std::max(*lo[k], l) : l;
    hi[k] = hi[k] ? std::min(*hi[k], h) : h;
  }
}

}  // namespace

std::vector<GridInequality> skep_inequalities(int n) {
  std::vector<GridInequality> out;
  for (const Point& a : tri_points(n)) {
    int i = a.i, j = a.j;
    // pos, pos, neg, neg
    Point f1[4] = {{i + 1, j}, {i + 1, j + 1}, {i + 2, j + 1}, {i, j}};
    Point f2[4] = {{i, j + 1}, {i + 1, j + 1}, {i + 1, j + 2}, {i, j}};
    Point f3[4] = {{i, j - 1}, {i + 1, j - 1}, {i + 1, j - 2}, {i, j}};
    Point f4[4] = {{i + 1, j}, {i + 1, j - 1}, {i + 2, j - 1}, {i, j}};
    int fam = 1;
    for (const Point* f : {f1, f2, f3, f4}) {
      if (all_in(n, f, 4)) out.push_back({fam, a, {f[0], f[1]}, {f[2], f[3]}});
      ++fam;
    }
  }
  if (n >= 2) out.push_back({5, {0, 0}, {{0, 0}}, {{1, 1}}});
  return out;
}

Validity is_skep(const TriGrid& g) { return check_inequalities(g, skep_inequalities(g.n())); }

IntVec boundary_1(const TriGrid& g) {
  IntVec z = boundary_corner(g);
  IntVec r(static_cast<std::size_t>(g.n()));
  for (int k = 0; k < g.n(); ++k) r[k] = z[2 * k];
  return r;
}

IntVec boundary_2(const TriGrid& g) {
  IntVec z = boundary_corner(g);
  IntVec r(static_cast<std::size_t>(g.n()));
  for (int k = 0; k < g.n(); ++k) r[k] = z[2 * k + 1];
  return r;
}

IntVec boundary_plus(const TriGrid& g) { return boundary_1(g) + boundary_2(g); }

IntVec boundary_plus(const PlusGrid& gp) {
  std::vector<Point> path = corner_path(gp.n());
  IntVec r(static_cast<std::size_t>(gp.n()));
  for (int k = 1; k <= gp.n(); ++k) r[k - 1] = checked_sub(gp(path[2 * k]), gp(path[2 * k - 2]));
  return r;
}

namespace {

template <class Visit>
void search_skeps(const IntVec& lam, const IntVec& mu, const IntVec& nu, Visit&& visit) {
  require_same_length(lam, mu);
  require_same_length(lam, nu);
  int n = static_cast<int>(lam.size());
  TriGrid g(n);
  std::vector<Point> path = corner_path(n);
  Int s = 0;
  for (int k = 1; k <= 2 * n; ++k) {
    s = checked_add(s, (k % 2) ? lam[(k - 1) / 2] : mu[(k - 1) / 2]);
    g.set(path[k].i, path[k].j, s);
  }
  Int d = 0;
  for (int k = 1; k <= n; ++k) {
    d = checked_add(d, nu[k - 1]);
    if (k == n) {
      if (d != g(0, n)) return;
    } else {
      g.set(n - k, k, d);
    }
  }
  std::vector<Point> order;
  for (const Point& p : tri_points(n))
    if (p.i >= 1 && p.j >= 1 && p.i + p.j <= n - 1) order.push_back(p);
  std::vector<std::optional<Int>> lo(order.size()), hi(order.size());
  nw_bounds(g, nu, order, lo, hi);
  detail::GridSearch search(std::move(g), std::move(order), skep_inequalities(n), std::move(lo), std::move(hi));
  search.for_each(visit);
}

template <class Visit>
void search_ext(const PlusGrid& gp, const IntVec& lam, Visit&& visit) {
  int n = gp.n();
  if (lam.size() != static_cast<std::size_t>(n)) {
    throw LengthMismatch("lambda length " + std::to_string(lam.size()) + " does not match side " +
                         std::to_string(n));
  }
  TriGrid g = interweave(gp, MinusGrid(n));
  std::vector<Point> path = corner_path(n);
  for (int k = 1; k <= n; ++k) {
    const Point& p = path[2 * k - 1];
    g.set(p.i, p.j, checked_add(lam[k - 1], gp(path[2 * k - 2])));
  }
  std::vector<Point> order;
  for (const Point& p : tri_points(n, Parity::minus))
    if (p.i >= 1 && p.j >= 1) order.push_back(p);
  std::vector<std::optional<Int>> lo(order.size()), hi(order.size());
  nw_bounds(g, boundary_diag(gp), order, lo, hi);
  detail::GridSearch search(std::move(g), std::move(order), skep_inequalities(n), std::move(lo), std::move(hi));
  search.for_each(visit);
}

}  // namespace

std::vector<TriGrid> enumerate_skeps(const IntVec& lam, const IntVec& mu, const IntVec& nu) {
  std::vector<TriGrid> out;
  search_skeps(lam, mu, nu, [&](const TriGrid& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_skeps(const IntVec& lam, const IntVec& mu, const IntVec& nu) {
  std::uint64_t c = 0;
  search_skeps(lam, mu, nu, [&](const TriGrid&) { ++c; });
  return c;
}

std::uint64_t lr_via_skeps(const IntVec& lam, const IntVec& mu, const IntVec& nu) {
  require_same_length(lam, mu);
  require_same_length(lam, nu);
  require_partition(lam, "lambda");
  require_partition(mu, "mu");
  require_partition(nu, "nu");
  return count_skeps(lam, mu, nu);
}

std::uint64_t skep_ext(const PlusGrid& gp, const IntVec& lam) {
  std::uint64_t c = 0;
  search_ext(gp, lam, [&](const TriGrid&) { ++c; });
  return c;
}

std::vector<MinusGrid> skep_ext_list(const PlusGrid& gp, const IntVec& lam) {
  std::vector<MinusGrid> out;
  search_ext(gp, lam, [&](const TriGrid& g) { out.push_back(split(g).minus); });
  return out;
}

std::vector<PlusGrid> enumerate_gplus(const IntVec& nu, const IntVec& pi) {
  require_same_length(nu, pi);
  int n = static_cast<int>(nu.size());
  std::vector<PlusGrid> out;
  if (nu.sum() != pi.sum()) return out;
  TriGrid g(n);
  std::vector<Point> path = corner_path(n);
  Int s = 0;
  for (int k = 1; k <= n; ++k) {
    s = checked_add(s, pi[k - 1]);
    g.set(path[2 * k].i, path[2 * k].j, s);
  }
  Int d = 0;
  for (int k = 1; k < n; ++k) {
    d = checked_add(d, nu[k - 1]);
    g.set(n - k, k, d);
  }
  std::vector<Point> order;
  for (const Point& p : tri_points(n, Parity::plus))
    if (p.i >= 1 && p.j >= 1 && p.i + p.j <= n - 2) order.push_back(p);
  std::vector<std::optional<Int>> lo(order.size()), hi(order.size());
  // NE chains run from an edge point down to a diagonal point.
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Point& p = order[k];
    int m = std::min(p.i, p.j);
    int up = (n - p.i - p.j) / 2;
    hi[k] = g(p.i - m, p.j - m);
    lo[k] = g(p.i + up, p.j + up);
  }
  nw_bounds(g, nu, order, lo, hi);
  std::vector<GridInequality> ne;
  for (const Point& p : tri_points(n, Parity::plus))
    if (in_triangle(n, p.i + 1, p.j + 1)) ne.push_back({0, p, {p}, {{p.i + 1, p.j + 1}}});
  detail::GridSearch search(std::move(g), std::move(order), ne, std::move(lo), std::move(hi));
  search.for_each([&](const TriGrid& h) { out.push_back(split(h).plus); });
  return out;
}

std::uint64_t lr_via_sum(const IntVec& lam, const IntVec& mu, const IntVec& nu) {
  require_same_length(lam, mu);
  require_same_length(lam, nu);
  require_partition(lam, "lambda");
  require_partition(mu, "mu");
  require_partition(nu, "nu");
  std::uint64_t total = 0;
  for (const PlusGrid& gp : enumerate_gplus(nu, lam + mu)) total += skep_ext(gp, lam);
  return total;
}

}  // namespace lrskep
