#include "lrskep/hive.hpp"

#include "lrskep/detail/search.hpp"

namespace lrskep {

namespace {

bool all_in(int n, std::initializer_list<Point> pts) {
  for (const Point& p : pts)
    if (!in_triangle(n, p.i, p.j)) return false;
  return true;
}

}  // namespace

std::vector<GridInequality> hive_inequalities(int n) {
  std::vector<GridInequality> out;
  for (const Point& a : tri_points(n)) {
    int i = a.i, j = a.j;
    Point f1[4] = {{i + 1, j}, {i, j + 1}, {i, j}, {i + 1, j + 1}};
    Point f2[4] = {{i, j + 1}, {i, j}, {i - 1, j + 1}, {i + 1, j}};
    Point f3[4] = {{i + 1, j}, {i, j}, {i + 1, j - 1}, {i, j + 1}};
    int fam = 1;
    for (const Point* f : {f1, f2, f3}) {
      if (all_in(n, {f[0], f[1], f[2], f[3]})) out.push_back({fam, a, {f[0], f[1]}, {f[2], f[3]}});
      ++fam;
    }
  }
  return out;
}

Validity is_hive(const TriGrid& h) { return check_inequalities(h, hive_inequalities(h.n())); }

IntVec boundary_left(const TriGrid& h) {
  IntVec z = boundary_corner(h);
  return IntVec(std::vector<Int>(z.begin(), z.begin() + h.n()));
}

IntVec boundary_up(const TriGrid& h) {
  IntVec z = boundary_corner(h);
  return IntVec(std::vector<Int>(z.begin() + h.n(), z.end()));
}

namespace {

// Fills the boundary of a normalized hive; false when the data is inconsistent.
bool hive_boundary(const IntVec& lam, const IntVec& mu, const IntVec& nu, TriGrid& g) {
  int n = g.n();
  Int s = 0;
  for (int k = 0; k <= n; ++k) {
    if (k) s = checked_add(s, lam[k - 1]);
    g.set(n - k, 0, s);
  }
  for (int j = 1; j <= n; ++j) {
    s = checked_add(s, mu[j - 1]);
    g.set(0, j, s);
  }
  Int d = 0;
  for (int k = 1; k <= n; ++k) {
    d = checked_add(d, nu[k - 1]);
    if (k == n) return d == g(0, n);
    g.set(n - k, k, d);
  }
  return true;
}

template <class Visit>
void search_hives(const IntVec& lam, const IntVec& mu, const IntVec& nu, Visit&& visit) {
  require_same_length(lam, mu);
  require_same_length(lam, nu);
  int n = static_cast<int>(lam.size());
  TriGrid g(n);
  if (!hive_boundary(lam, mu, nu, g)) return;
  std::vector<Point> order;
  for (const Point& p : tri_points(n))
    if (p.i >= 1 && p.j >= 1 && p.i + p.j <= n - 1) order.push_back(p);
  // Raster order already gives every interior point a lower bound (family 2
  // at (i,j-1)) and an upper bound (family 1 at (i-1,j-1)).
  std::vector<std::optional<Int>> none(order.size());
  detail::GridSearch search(std::move(g), std::move(order), hive_inequalities(n), none, none);
  search.for_each(visit);
}

}  // namespace

std::vector<TriGrid> enumerate_hives(const IntVec& lam, const IntVec& mu, const IntVec& nu) {
  std::vector<TriGrid> out;
  search_hives(lam, mu, nu, [&](const TriGrid& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_hives(const IntVec& lam, const IntVec& mu, const IntVec& nu) {
  std::uint64_t c = 0;
  search_hives(lam, mu, nu, [&](const TriGrid&) { ++c; });
  return c;
}

std::uint64_t lr_via_hives(const IntVec& lam, const IntVec& mu, const IntVec& nu) {
  require_same_length(lam, mu);
  require_same_length(lam, nu);
  require_partition(lam, "lambda");
  require_partition(mu, "mu");
  require_partition(nu, "nu");
  return count_hives(lam, mu, nu);
}

}  // namespace lrskep
