#include "lrskep/lattice.hpp"

#include <algorithm>
#include <set>

namespace lrskep {

namespace {

Int floor_half(Int s) { return (s >= 0) ? s / 2 : -((-s + 1) / 2); }

}  // namespace

IntVec meet(const IntVec& x, const IntVec& y) {
  require_same_length(x, y);
  IntVec r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = std::min(x[k], y[k]);
  return r;
}

IntVec join(const IntVec& x, const IntVec& y) {
  require_same_length(x, y);
  IntVec r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = std::max(x[k], y[k]);
  return r;
}

IntVec floor_avg(const IntVec& x, const IntVec& y) {
  require_same_length(x, y);
  IntVec r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = floor_half(checked_add(x[k], y[k]));
  return r;
}

IntVec ceil_avg(const IntVec& x, const IntVec& y) {
  require_same_length(x, y);
  IntVec r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    Int s = checked_add(x[k], y[k]);
    r[k] = s - floor_half(s);
  }
  return r;
}

Int l_distance(const IntVec& x, const IntVec& y) {
  require_same_length(x, y);
  if (x.empty()) return 0;
  IntVec d = x - y;
  return checked_sub(d.max(), d.min());
}

IntVec Parallelepiped::apex() const {
  IntVec r = base;
  for (std::size_t k = 0; k < directions.size(); ++k)
    r += distances[k] * indicator(base.size(), directions[k]);
  return r + shift * ones(base.size());
}

std::size_t Parallelepiped::size() const {
  std::size_t s = 1;
  for (Int l : distances) s *= static_cast<std::size_t>(l + 1);
  return s;
}

Parallelepiped pi_decompose(const IntVec& x, const IntVec& y) {
  require_same_length(x, y);
  Parallelepiped p;
  p.base = x;
  if (x.empty()) return p;
  IntVec d = y - x;
  std::vector<Int> h(d.begin(), d.end());
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  p.shift = h[0];
  for (std::size_t k = 1; k < h.size(); ++k) {
    std::vector<std::size_t> dir;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] >= h[k]) dir.push_back(i);
    p.directions.push_back(std::move(dir));
    p.distances.push_back(checked_sub(h[k], h[k - 1]));
  }
  return p;
}

bool pi_contains(const IntVec& x, const IntVec& y, const IntVec& z) {
  require_same_length(x, y);
  require_same_length(x, z);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      Int a = checked_sub(x[i], x[j]);
      Int b = checked_sub(y[i], y[j]);
      Int c = checked_sub(z[i], z[j]);
      if (c < std::min(a, b) || c > std::max(a, b)) return false;
    }
  }
  return true;
}

std::vector<IntVec> pi_enumerate(const IntVec& x, const IntVec& y) {
  Parallelepiped p = pi_decompose(x, y);
  std::vector<IntVec> steps;
  for (const auto& dir : p.directions) steps.push_back(indicator(x.size(), dir));
  std::vector<IntVec> out;
  std::vector<Int> a(p.directions.size(), 0);
  while (true) {
    IntVec z = x;
    for (std::size_t k = 0; k < a.size(); ++k) z += a[k] * steps[k];
    out.push_back(std::move(z));
    std::size_t k = a.size();
    while (k > 0 && a[k - 1] == p.distances[k - 1]) a[--k] = 0;
    if (k == 0) break;
    ++a[k - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_bounds(Bound b, Bound c) {
  if (b.kind == Bound::Kind::pos_inf || c.kind == Bound::Kind::neg_inf) {
    throw std::invalid_argument("zig/zag: b may only be -inf and c only +inf");
  }
  if (b.kind == Bound::Kind::finite && c.kind == Bound::Kind::finite && b.value >= c.value) {
    throw std::invalid_argument("zig/zag: need b < c");
  }
}

}  // namespace

IntVec zig(const IntVec& x, const IntVec& y, Bound b, Bound c) {
  require_same_length(x, y);
  check_bounds(b, c);
  IntVec r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    Int v = y[k];
    if (b.kind == Bound::Kind::finite) v = std::max(v, checked_add(x[k], b.value));
    if (c.kind == Bound::Kind::finite) v = std::min(v, checked_add(x[k], c.value));
    r[k] = v;
  }
  return r;
}

IntVec zag(const IntVec& x, const IntVec& y, Bound b, Bound c) { return x + y - zig(x, y, b, c); }

IntVec zig(const IntVec& x, const IntVec& y, Int b, Int c) {
  return zig(x, y, Bound::finite(b), Bound::finite(c));
}

IntVec zag(const IntVec& x, const IntVec& y, Int b, Int c) {
  return zag(x, y, Bound::finite(b), Bound::finite(c));
}

IntVec delta_coords(const IntVec& lam, const IntVec& mu) { return mu - lam; }

std::pair<IntVec, IntVec> pair_from_delta(const IntVec& pi, const IntVec& delta) {
  require_same_length(pi, delta);
  IntVec lam(pi.size()), mu(pi.size());
  for (std::size_t k = 0; k < pi.size(); ++k) {
    Int a = checked_sub(pi[k], delta[k]);
    if (a % 2 != 0) throw std::invalid_argument("pair_from_delta: delta and pi differ in parity");
    lam[k] = a / 2;
    mu[k] = checked_add(pi[k], delta[k]) / 2;
  }
  return {lam, mu};
}

bool preorder_leq(const IntVec& d1, const IntVec& d2) {
  require_same_length(d1, d2);
  for (std::size_t i = 0; i < d1.size(); ++i) {
    for (std::size_t j = i + 1; j < d1.size(); ++j) {
      Int a = checked_sub(d1[i], d1[j]);
      Int b = checked_sub(d2[i], d2[j]);
      if ((a < 0 ? -a : a) > (b < 0 ? -b : b)) return false;
    }
  }
  return true;
}

bool pair_leq(const IntVec& lam2, const IntVec& mu2, const IntVec& lam, const IntVec& mu) {
  if (lam2 + mu2 != lam + mu) return false;
  return preorder_leq(delta_coords(lam2, mu2), delta_coords(lam, mu));
}

Rational PiecewiseContraction::operator()(Rational x) const {
  if (xs.empty()) return Rational(0);
  if (x <= Rational(xs.front())) return Rational(ys.front());
  if (x >= Rational(xs.back())) return Rational(ys.back());
  std::size_t k = 1;
  while (Rational(xs[k]) < x) ++k;
  Rational t = (x - Rational(xs[k - 1])) / Rational(xs[k] - xs[k - 1]);
  return Rational(ys[k - 1]) + t * Rational(ys[k] - ys[k - 1]);
}

std::vector<Rational> PiecewiseContraction::slopes() const {
  std::vector<Rational> s;
  for (std::size_t k = 1; k < xs.size(); ++k) s.emplace_back(ys[k] - ys[k - 1], xs[k] - xs[k - 1]);
  return s;
}

std::optional<PiecewiseContraction> build_contraction(const IntVec& d, const IntVec& d2) {
  if (!preorder_leq(d2, d)) return std::nullopt;
  std::vector<std::pair<Int, Int>> pts;
  for (std::size_t k = 0; k < d.size(); ++k) pts.emplace_back(d[k], d2[k]);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  PiecewiseContraction f;
  for (const auto& [a, b] : pts) {
    f.xs.push_back(a);
    f.ys.push_back(b);
  }
  return f;
}

Int phi_bc(Int z, Int b, Int c) {
  if (b >= c) throw std::invalid_argument("phi_bc: need b < c");
  if (z <= b) return checked_sub(z, checked_mul(2, b));
  if (z <= c) return checked_neg(z);
  return checked_sub(z, checked_mul(2, c));
}

std::vector<std::pair<IntVec, IntVec>> covers(const IntVec& lam, const IntVec& mu) {
  IntVec delta = delta_coords(lam, mu);
  std::vector<Int> v(delta.begin(), delta.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<std::pair<Int, Int>> bc;
  for (std::size_t p = 0; p < v.size(); ++p) {
    bc.emplace_back(v[p], checked_add(v[p], 1));
    for (std::size_t q = p + 1; q < v.size(); ++q) bc.emplace_back(v[p], v[q]);
  }
  std::set<std::pair<IntVec, IntVec>> out;
  for (const auto& [b, c] : bc) {
    IntVec z1 = zig(lam, mu, b, c);
    IntVec z2 = zag(lam, mu, b, c);
    IntVec d2 = delta_coords(z1, z2);
    if (preorder_leq(d2, delta) && !preorder_leq(delta, d2)) out.emplace(std::move(z1), std::move(z2));
  }
  return {out.begin(), out.end()};
}

}  // namespace lrskep
