#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "lrskep/core.hpp"

namespace lrskep {

IntVec meet(const IntVec& x, const IntVec& y);
IntVec join(const IntVec& x, const IntVec& y);
IntVec floor_avg(const IntVec& x, const IntVec& y);
IntVec ceil_avg(const IntVec& x, const IntVec& y);

// max_i(x_i - y_i) - min_j(x_j - y_j).
Int l_distance(const IntVec& x, const IntVec& y);

// y = base + sum_k distances[k] * e_{directions[k]} + shift * 1_n, with the
// directions a strictly decreasing chain of proper nonempty subsets.
// Direction indices are 0-based.
struct Parallelepiped {
  IntVec base;
  std::vector<std::vector<std::size_t>> directions;
  std::vector<Int> distances;
  Int shift = 0;

  IntVec apex() const;
  // Number of 1_n-classes of lattice points: prod (distance + 1).
  std::size_t size() const;
};

Parallelepiped pi_decompose(const IntVec& x, const IntVec& y);
bool pi_contains(const IntVec& x, const IntVec& y, const IntVec& z);
// One representative per 1_n-class of Pi(x,y): x + sum a_k e_{I_k} with
// 0 <= a_k <= l_k.
std::vector<IntVec> pi_enumerate(const IntVec& x, const IntVec& y);

// Endpoint of the clamp window in zig/zag. Infinite values are allowed only
// as b = -inf or c = +inf.
struct Bound {
  enum class Kind { neg_inf, finite, pos_inf };
  Kind kind = Kind::finite;
  Int value = 0;

  static Bound finite(Int v) { return {Kind::finite, v}; }
  static Bound neg_inf() { return {Kind::neg_inf, 0}; }
  static Bound pos_inf() { return {Kind::pos_inf, 0}; }
};

// Componentwise: x + b if y <= x + b; y if x + b <= y <= x + c; x + c if
// y >= x + c. zag = x + y - zig.
IntVec zig(const IntVec& x, const IntVec& y, Bound b, Bound c);
IntVec zag(const IntVec& x, const IntVec& y, Bound b, Bound c);
IntVec zig(const IntVec& x, const IntVec& y, Int b, Int c);
IntVec zag(const IntVec& x, const IntVec& y, Int b, Int c);

IntVec delta_coords(const IntVec& lam, const IntVec& mu);
// ((pi - delta) / 2, (pi + delta) / 2); requires delta == pi mod 2.
std::pair<IntVec, IntVec> pair_from_delta(const IntVec& pi, const IntVec& delta);

// |d1_i - d1_j| <= |d2_i - d2_j| for all i, j.
bool preorder_leq(const IntVec& d1, const IntVec& d2);
// (lam2, mu2) below (lam, mu): same sum and Pi(lam2, mu2) inside Pi(lam, mu).
// Decided through delta coordinates.
bool pair_leq(const IntVec& lam2, const IntVec& mu2, const IntVec& lam, const IntVec& mu);

using Rational = boost::rational<Int>;

// Piecewise-linear map through (xs[k], ys[k]), constant outside [xs.front(),
// xs.back()].
struct PiecewiseContraction {
  std::vector<Int> xs;
  std::vector<Int> ys;

  Rational operator()(Rational x) const;
  std::vector<Rational> slopes() const;
};

// A contraction sending d_i to d2_i, or nullopt when d2 is not below d.
std::optional<PiecewiseContraction> build_contraction(const IntVec& d, const IntVec& d2);

// z - 2b if z <= b; -z if b <= z <= c; z - 2c if z >= c.
Int phi_bc(Int z, Int b, Int c);

// The (zig, zag) pairs over (b, c) in {(v_p, v_p + 1)} and {(v_p, v_q)}, v the
// sorted distinct entries of mu - lam, restricted to pairs strictly below
// (lam, mu). Sorted and deduplicated.
std::vector<std::pair<IntVec, IntVec>> covers(const IntVec& lam, const IntVec& mu);

}  // namespace lrskep
