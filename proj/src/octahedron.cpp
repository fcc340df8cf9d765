#include "lrskep/octahedron.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "lrskep/hive.hpp"
#include "lrskep/skep.hpp"

namespace lrskep {

bool in_tetra(int n, int i, int j, int t) {
  if (i < 0 || j < 0) return false;
  int r = n - i - j;
  if (t > r || t < -r) return false;
  return ((t - i - j - n) % 2) == 0;
}

std::vector<TetraPoint> tetra_points(int n) {
  std::vector<TetraPoint> out;
  for (int t = -n; t <= n; ++t)
    for (const Point& p : tri_points(n))
      if (in_tetra(n, p.i, p.j, t)) out.push_back({p.i, p.j, t});
  return out;
}

TetraFunc::TetraFunc(int n) : n_(n), offset_(tri_size(n) + 1, 0) {
  std::size_t k = 0;
  for (const Point& p : tri_points(n)) {
    offset_[k + 1] = offset_[k] + static_cast<std::size_t>(n - p.i - p.j + 1);
    ++k;
  }
  v_.assign(offset_.back(), 0);
}

std::size_t TetraFunc::index(int i, int j, int t) const {
  if (!in_tetra(n_, i, j, t)) {
    throw std::out_of_range("point (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(t) +
                            ") not in tetrahedron");
  }
  return offset_[tri_index(n_, i, j)] + static_cast<std::size_t>((t + n_ - i - j) / 2);
}

Int TetraFunc::at(int i, int j, int t) const { return v_[index(i, j, t)]; }
void TetraFunc::set(int i, int j, int t, Int v) { v_[index(i, j, t)] = v; }

const char* to_string(SliceKind s) {
  switch (s) {
    case SliceKind::hive_top: return "hive_top";
    case SliceKind::hive_bottom: return "hive_bottom";
    case SliceKind::skep_top: return "skep_top";
    case SliceKind::skep_bottom: return "skep_bottom";
  }
  return "?";
}

int slice_t(SliceKind s, int n, int i, int j) {
  switch (s) {
    case SliceKind::hive_top: return n - i - j;
    case SliceKind::hive_bottom: return -(n - i - j);
    case SliceKind::skep_top: return epsilon(i, j, n);
    case SliceKind::skep_bottom: return -epsilon(i, j, n);
  }
  throw std::invalid_argument("bad slice kind");
}

namespace {

// Values filled in so far, and the right-hand side of the recurrence.
class Recurrence {
 public:
  explicit Recurrence(int n) : n_(n), h_(n), known_(tri_size(n) * (2 * n + 1), false) {}

  TetraFunc& h() { return h_; }
  bool known(int i, int j, int t) const { return known_[key(i, j, t)]; }
  void put(int i, int j, int t, Int v) {
    h_.set(i, j, t, v);
    known_[key(i, j, t)] = true;
  }
  Int get(int i, int j, int t) const {
    if (!known(i, j, t)) throw std::logic_error("propagation order reached an unknown value");
    return h_.at(i, j, t);
  }

  // h(i,j,s+1) + h(i,j,s-1) in terms of level s.
  Int rhs(int i, int j, int s) const {
    if (i >= 1 && j >= 1) {
      Int a = checked_add(get(i - 1, j, s), get(i + 1, j, s));
      Int b = checked_add(get(i, j - 1, s), get(i, j + 1, s));
      return std::max(a, b);
    }
    if (i >= 1) return checked_add(get(i - 1, 0, s), get(i + 1, 0, s));
    if (j >= 1) return checked_add(get(0, j - 1, s), get(0, j + 1, s));
    return checked_add(get(1, 0, s), get(0, 1, s));
  }

 private:
  std::size_t key(int i, int j, int t) const {
    return tri_index(n_, i, j) * static_cast<std::size_t>(2 * n_ + 1) + static_cast<std::size_t>(t + n_);
  }
  int n_;
  TetraFunc h_;
  std::vector<bool> known_;
};

}  // namespace

TetraFunc propagate(const TriGrid& init, SliceKind from) {
  int n = init.n();
  Recurrence r(n);
  for (const Point& p : tri_points(n)) r.put(p.i, p.j, slice_t(from, n, p.i, p.j), init(p));
  std::vector<Point> pts = tri_points(n);
  for (int t = -n; t <= n; ++t) {
    for (const Point& p : pts) {
      if (!in_tetra(n, p.i, p.j, t) || t <= slice_t(from, n, p.i, p.j)) continue;
      r.put(p.i, p.j, t, checked_sub(r.rhs(p.i, p.j, t - 1), r.get(p.i, p.j, t - 2)));
    }
  }
  for (int t = n; t >= -n; --t) {
    for (const Point& p : pts) {
      if (!in_tetra(n, p.i, p.j, t) || t >= slice_t(from, n, p.i, p.j)) continue;
      r.put(p.i, p.j, t, checked_sub(r.rhs(p.i, p.j, t + 1), r.get(p.i, p.j, t + 2)));
    }
  }
  return r.h();
}

TriGrid restrict_to(const TetraFunc& h, SliceKind to) {
  int n = h.n();
  TriGrid g(n);
  for (const Point& p : tri_points(n)) g.set(p.i, p.j, h.at(p.i, p.j, slice_t(to, n, p.i, p.j)));
  return g;
}

bool obeys_recurrence(const TetraFunc& h) {
  int n = h.n();
  Recurrence r(n);
  for (const TetraPoint& p : tetra_points(n)) r.put(p.i, p.j, p.t, h(p));
  for (const TetraPoint& p : tetra_points(n)) {
    if (!in_tetra(n, p.i, p.j, p.t - 2)) continue;
    if (checked_add(h(p), h.at(p.i, p.j, p.t - 2)) != r.rhs(p.i, p.j, p.t - 1)) return false;
  }
  return true;
}

TriGrid hive_to_skep(const TriGrid& h) {
  if (!is_hive(h)) throw std::invalid_argument("hive_to_skep: input is not a hive");
  return restrict_to(propagate(h, SliceKind::hive_bottom), SliceKind::skep_bottom);
}

TriGrid skep_to_hive(const TriGrid& g) {
  if (!is_skep(g)) throw std::invalid_argument("skep_to_hive: input is not a skep");
  return restrict_to(propagate(g, SliceKind::skep_bottom), SliceKind::hive_bottom);
}

TriGrid hive_flip(const TriGrid& h) {
  if (!is_hive(h)) throw std::invalid_argument("hive_flip: input is not a hive");
  return restrict_to(propagate(h, SliceKind::hive_bottom), SliceKind::hive_top);
}

TriGrid skep_flip(const TriGrid& g) {
  if (!is_skep(g)) throw std::invalid_argument("skep_flip: input is not a skep");
  return restrict_to(propagate(g, SliceKind::skep_bottom), SliceKind::skep_top);
}

namespace {

TetraPoint shifted(const TetraPoint& w, int axis, int sign) {
  TetraPoint p = w;
  (axis == 0 ? p.i : axis == 1 ? p.j : p.t) += sign;
  return p;
}

}  // namespace

std::vector<Rhombus> unit_rhombi(int n) {
  using Pair = std::pair<TetraPoint, TetraPoint>;
  std::set<std::pair<Pair, Pair>> seen;
  std::vector<Rhombus> out;
  auto inside = [n](const TetraPoint& p) { return in_tetra(n, p.i, p.j, p.t); };
  for (int i = -1; i <= n + 1; ++i) {
    for (int j = -1; j <= n + 1; ++j) {
      for (int t = -n - 1; t <= n + 1; ++t) {
        TetraPoint w{i, j, t};
        for (int signs = 0; signs < 8; ++signs) {
          TetraPoint v[3];
          bool ok = true;
          for (int a = 0; a < 3; ++a) {
            v[a] = shifted(w, a, ((signs >> a) & 1) ? 1 : -1);
            ok = ok && inside(v[a]);
          }
          if (!ok) continue;
          for (int o = 0; o < 3; ++o) {
            const TetraPoint& O = v[o];
            const TetraPoint& P = v[(o + 1) % 3];
            const TetraPoint& Q = v[(o + 2) % 3];
            TetraPoint R{P.i + Q.i - O.i, P.j + Q.j - O.j, P.t + Q.t - O.t};
            if (!inside(R)) continue;
            Pair lg = std::minmax(O, R);
            Pair sh = std::minmax(P, Q);
            if (seen.emplace(lg, sh).second) out.push_back({lg.first, lg.second, sh.first, sh.second});
          }
        }
      }
    }
  }
  return out;
}

RhombusCheck check_rhombus_all(const TetraFunc& h) {
  for (const Rhombus& r : unit_rhombi(h.n())) {
    Int lhs = checked_add(h(r.long1), h(r.long2));
    Int rhs = checked_add(h(r.short1), h(r.short2));
    if (lhs > rhs) return RhombusCheck{false, r, lhs, rhs};
  }
  return RhombusCheck{};
}

bool check_wall_identity(const TetraFunc& h) {
  int n = h.n();
  auto phi = [](int k, int t) { return k >= 0 ? TetraPoint{k, 0, t} : TetraPoint{0, -k, t}; };
  auto has = [&](const TetraPoint& p) { return in_tetra(n, p.i, p.j, p.t); };
  for (int k = -n; k <= n; ++k) {
    for (int t = -n; t <= n; ++t) {
      TetraPoint a = phi(k, t), b = phi(k, t - 2), c = phi(k - 1, t - 1), d = phi(k + 1, t - 1);
      if (!has(a) || !has(b)) continue;
      if (checked_add(h(a), h(b)) != checked_add(h(c), h(d))) return false;
    }
  }
  return true;
}

}  // namespace lrskep
