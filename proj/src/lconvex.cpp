#include "lrskep/lconvex.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "lrskep/lattice.hpp"

namespace lrskep {

void DiffConstraints::set(std::size_t i, std::size_t j, std::optional<Int> c) {
  if (i >= n_ || j >= n_) throw std::out_of_range("constraint index out of range");
  if (i == j) throw std::invalid_argument("diagonal constraints are fixed at 0");
  c_[i * n_ + j] = c;
}

void DiffConstraints::tighten(std::size_t i, std::size_t j, Int c) {
  std::optional<Int> cur = get(i, j);
  if (!cur || c < *cur) set(i, j, c);
}

std::optional<DiffConstraints> closure(const DiffConstraints& dc) {
  std::size_t n = dc.n();
  DiffConstraints r = dc;
  std::vector<std::optional<Int>> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i * n + j] = dc.get(i, j);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!c[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!c[k * n + j]) continue;
        Int via = checked_add(*c[i * n + k], *c[k * n + j]);
        auto& cur = c[i * n + j];
        if (!cur || via < *cur) cur = via;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (*c[i * n + i] < 0) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) r.set(i, j, c[i * n + j]);
  return r;
}

bool dc_contains(const DiffConstraints& dc, const IntVec& x) {
  if (x.size() != dc.n()) throw LengthMismatch("point dimension does not match constraints");
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j) continue;
      std::optional<Int> c = dc.get(i, j);
      if (c && checked_sub(x[i], x[j]) > *c) return false;
    }
  }
  return true;
}

DiffConstraints pi_constraints(const IntVec& x, const IntVec& y) {
  require_same_length(x, y);
  DiffConstraints dc(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (i != j) dc.set(i, j, std::max(checked_sub(x[i], x[j]), checked_sub(y[i], y[j])));
  return dc;
}

bool Box::contains(const IntVec& x) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] < lo[k] || x[k] > hi[k]) return false;
  return true;
}

std::size_t Box::size() const {
  std::size_t s = 1;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (hi[k] < lo[k]) return 0;
    s *= static_cast<std::size_t>(hi[k] - lo[k] + 1);
  }
  return s;
}

std::size_t Box::index(const IntVec& x) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    idx = idx * static_cast<std::size_t>(hi[k] - lo[k] + 1) + static_cast<std::size_t>(x[k] - lo[k]);
  return idx;
}

const char* to_string(SetMode m) {
  switch (m) {
    case SetMode::pairs: return "pairs";
    case SetMode::meetjoin: return "meetjoin";
    case SetMode::midpoint: return "midpoint";
  }
  return "?";
}

const char* to_string(FuncMode m) {
  switch (m) {
    case FuncMode::pairs: return "pairs";
    case FuncMode::meetjoin: return "meetjoin";
    case FuncMode::midpoint: return "midpoint";
    case FuncMode::parallelogram: return "parallelogram";
  }
  return "?";
}

namespace {

// Range of c with z + c*1 inside the box; empty when lo > hi.
std::pair<Int, Int> translate_range(const Box& w, const IntVec& z) {
  Int lo = std::numeric_limits<Int>::min(), hi = std::numeric_limits<Int>::max();
  for (std::size_t k = 0; k < z.size(); ++k) {
    lo = std::max(lo, checked_sub(w.lo[k], z[k]));
    hi = std::min(hi, checked_sub(w.hi[k], z[k]));
  }
  return {lo, hi};
}

// Calls visit(x', y') for every x' in Pi(x,y) with x' and y' = x + y - x'
// both in the window.
template <class Visit>
bool for_each_exchange(const Box& w, const IntVec& x, const IntVec& y, Visit&& visit) {
  IntVec s = x + y;
  if (x.empty()) return visit(x, y);
  for (const IntVec& rep : pi_enumerate(x, y)) {
    auto [a1, b1] = translate_range(w, rep);
    // y' = s - rep - c*1 in window  <=>  -c in translate_range(s - rep)
    auto [a2, b2] = translate_range(w, s - rep);
    Int lo = std::max(a1, -b2), hi = std::min(b1, -a2);
    for (Int c = lo; c <= hi; ++c) {
      IntVec xp = rep + c * ones(x.size());
      IntVec yp = s - xp;
      if (!visit(xp, yp)) return false;
    }
  }
  return true;
}

using Wide = __int128;

}  // namespace

WindowReport check_lconvex_set_window(const std::function<bool(const IntVec&)>& member,
                                      const Box& window, SetMode mode) {
  WindowReport rep;
  std::vector<IntVec> in;
  for (const IntVec& x : window.points())
    if (member(x)) in.push_back(x);
  auto fail = [&](std::vector<IntVec> w, std::string why) {
    rep.ok = false;
    rep.witness = std::move(w);
    rep.detail = std::move(why);
  };
  for (std::size_t a = 0; a < in.size() && rep.ok; ++a) {
    for (std::size_t b = a; b < in.size() && rep.ok; ++b) {
      const IntVec& x = in[a];
      const IntVec& y = in[b];
      if (mode == SetMode::pairs) {
        for_each_exchange(window, x, y, [&](const IntVec& xp, const IntVec&) {
          ++rep.checked;
          if (!member(xp)) {
            fail({x, y, xp}, "point of Pi(x,y) missing");
            return false;
          }
          return true;
        });
      } else {
        IntVec p = mode == SetMode::meetjoin ? meet(x, y) : floor_avg(x, y);
        IntVec q = mode == SetMode::meetjoin ? join(x, y) : ceil_avg(x, y);
        ++rep.checked;
        if (!member(p) || !member(q)) fail({x, y, p, q}, std::string(to_string(mode)) + " point missing");
      }
    }
  }
  return rep;
}

WindowFunc::WindowFunc(Box window, const std::function<Int(const IntVec&)>& f)
    : window_(std::move(window)) {
  values_.reserve(window_.size());
  for (const IntVec& x : window_.points()) {
    Int v = f(x);
    if (v < 0) throw std::invalid_argument("window function has a negative value at " + to_string(x));
    values_.push_back(v);
  }
}

Int WindowFunc::operator()(const IntVec& x) const {
  if (!window_.contains(x)) throw std::out_of_range("query outside window: " + to_string(x));
  return values_[window_.index(x)];
}

WindowReport check_llog_concave_window(const WindowFunc& f, FuncMode mode) {
  WindowReport rep;
  const Box& w = f.window();
  std::vector<IntVec> pts = w.points();
  auto fail = [&](std::vector<IntVec> wit, Wide lhs, Wide rhs) {
    rep.ok = false;
    rep.witness = std::move(wit);
    rep.detail = std::string(to_string(mode)) + ": " + std::to_string(static_cast<long long>(lhs)) +
                 " < " + std::to_string(static_cast<long long>(rhs));
  };
  if (mode == FuncMode::parallelogram) {
    WindowReport sup = check_lconvex_set_window([&](const IntVec& x) { return w.contains(x) && f(x) > 0; },
                                                w, SetMode::meetjoin);
    rep.checked += sup.checked;
    if (!sup.ok) {
      rep.ok = false;
      rep.witness = sup.witness;
      rep.detail = "support not closed under meet/join";
      return rep;
    }
    std::size_t n = w.dim();
    for (const IntVec& x : pts) {
      for (std::size_t J = 1; J < (std::size_t{1} << n); ++J) {
        for (std::size_t I = J;; I = (I - 1) & J) {
          IntVec eI(n), eJ(n);
          for (std::size_t k = 0; k < n; ++k) {
            eI[k] = (I >> k) & 1;
            eJ[k] = (J >> k) & 1;
          }
          IntVec a = x + eI, b = x + eJ, c = x + eI + eJ;
          if (w.contains(c)) {
            ++rep.checked;
            Wide lhs = Wide(f(a)) * f(b), rhs = Wide(f(x)) * f(c);
            if (lhs < rhs) {
              fail({x, a, b, c}, lhs, rhs);
              return rep;
            }
          }
          if (I == 0) break;
        }
      }
    }
    return rep;
  }
  for (std::size_t ia = 0; ia < pts.size(); ++ia) {
    for (std::size_t ib = ia; ib < pts.size(); ++ib) {
      const IntVec& x = pts[ia];
      const IntVec& y = pts[ib];
      Wide base = Wide(f(x)) * f(y);
      if (mode == FuncMode::pairs) {
        if (base == 0) {
          ++rep.checked;
          continue;
        }
        for_each_exchange(w, x, y, [&](const IntVec& xp, const IntVec& yp) {
          ++rep.checked;
          Wide lhs = Wide(f(xp)) * f(yp);
          if (lhs < base) {
            fail({x, y, xp, yp}, lhs, base);
            return false;
          }
          return true;
        });
        if (!rep.ok) return rep;
      } else {
        IntVec p = mode == FuncMode::meetjoin ? meet(x, y) : floor_avg(x, y);
        IntVec q = mode == FuncMode::meetjoin ? join(x, y) : ceil_avg(x, y);
        ++rep.checked;
        Wide lhs = Wide(f(p)) * f(q);
        if (lhs < base) {
          fail({x, y, p, q}, lhs, base);
          return rep;
        }
      }
    }
  }
  return rep;
}

namespace {

void count_fiber(const DiffConstraints& c, std::size_t M, IntVec& full, std::size_t k, std::uint64_t& total) {
  std::size_t N = c.n() - M;
  if (k == N) {
    ++total;
    return;
  }
  std::size_t v = M + k;
  std::optional<Int> lo, hi;
  for (std::size_t u = 0; u < v; ++u) {
    // full[v] - full[u] <= c(v,u);  full[u] - full[v] <= c(u,v)
    if (auto cu = c.get(v, u)) {
      Int b = checked_add(full[u], *cu);
      if (!hi || b < *hi) hi = b;
    }
    if (auto cu = c.get(u, v)) {
      Int b = checked_sub(full[u], *cu);
      if (!lo || b > *lo) lo = b;
    }
  }
  if (!lo || !hi) throw InfiniteFiber("fiber coordinate " + std::to_string(k) + " is unbounded");
  for (Int y = *lo; y <= *hi; ++y) {
    full[v] = y;
    count_fiber(c, M, full, k + 1, total);
  }
  full[v] = 0;
}

}  // namespace

std::uint64_t marginal_count(const DiffConstraints& dc, const IntVec& x) {
  std::size_t M = x.size();
  if (M > dc.n()) throw LengthMismatch("x has more coordinates than the constraint system");
  std::optional<DiffConstraints> c = closure(dc);
  if (!c) return 0;
  for (std::size_t k = M; k < dc.n(); ++k) {
    bool up = false, down = false;
    for (std::size_t i = 0; i < M; ++i) {
      up = up || c->get(k, i).has_value();
      down = down || c->get(i, k).has_value();
    }
    if (!up || !down) throw InfiniteFiber("fiber coordinate " + std::to_string(k - M) + " is unbounded");
  }
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j)
      if (i != j)
        if (auto cij = c->get(i, j); cij && checked_sub(x[i], x[j]) > *cij) return 0;
  IntVec full(dc.n());
  for (std::size_t i = 0; i < M; ++i) full[i] = x[i];
  std::uint64_t total = 0;
  count_fiber(*c, M, full, 0, total);
  return total;
}

AdReport ad_check(const std::function<Weight(const IntVec&)>& f1,
                  const std::function<Weight(const IntVec&)>& f2,
                  const std::function<Weight(const IntVec&)>& f3,
                  const std::function<Weight(const IntVec&)>& f4, const std::vector<IntVec>& U,
                  const std::vector<IntVec>& V) {
  AdReport rep;
  std::set<IntVec> meets, joins;
  for (const IntVec& u : U) {
    for (const IntVec& v : V) {
      IntVec m = meet(u, v), j = join(u, v);
      if (rep.hypothesis_ok && f1(u) * f2(v) > f3(m) * f4(j)) {
        rep.hypothesis_ok = false;
        rep.hypothesis_witness = {u, v};
      }
      meets.insert(std::move(m));
      joins.insert(std::move(j));
    }
  }
  if (!rep.hypothesis_ok) return rep;
  std::set<IntVec> su(U.begin(), U.end()), sv(V.begin(), V.end());
  Weight s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  for (const IntVec& u : su) s1 += f1(u);
  for (const IntVec& v : sv) s2 += f2(v);
  for (const IntVec& m : meets) s3 += f3(m);
  for (const IntVec& j : joins) s4 += f4(j);
  rep.conclusion_checked = true;
  rep.lhs = s1 * s2;
  rep.rhs = s3 * s4;
  rep.conclusion_ok = rep.lhs <= rep.rhs;
  return rep;
}

}  // namespace lrskep
