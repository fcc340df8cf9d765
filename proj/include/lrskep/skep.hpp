#pragma once

#include <cstdint>
#include <vector>

#include "lrskep/core.hpp"
#include "lrskep/grid.hpp"

namespace lrskep {

// Skep inequality instances of side n. With d(a,b) = g(a) - g(b):
//   1: d((i,j),(i+1,j+1)) <= d((i+1,j),(i+2,j+1))
//   2: d((i,j),(i+1,j+1)) <= d((i,j+1),(i+1,j+2))
//   3: d((i,j),(i+1,j-1)) <= d((i,j-1),(i+1,j-2))
//   4: d((i,j),(i+1,j-1)) <= d((i+1,j),(i+2,j-1))
//   5: 0 <= g(0,0) - g(1,1)
std::vector<GridInequality> skep_inequalities(int n);

Validity is_skep(const TriGrid& g);

// Odd and even entries of the corner boundary.
IntVec boundary_1(const TriGrid& g);
IntVec boundary_2(const TriGrid& g);
IntVec boundary_plus(const TriGrid& g);
// Same value computed from the plus class only: g(p_{2k}) - g(p_{2k-2}).
IntVec boundary_plus(const PlusGrid& gp);

// All skeps with g_{n0} = 0, diagonal boundary nu and corner boundary
// (lam_1, mu_1, ..., lam_n, mu_n).
std::vector<TriGrid> enumerate_skeps(const IntVec& lam, const IntVec& mu, const IntVec& nu);
std::uint64_t count_skeps(const IntVec& lam, const IntVec& mu, const IntVec& nu);
// LR coefficient by counting skeps. Inputs must be partitions.
std::uint64_t lr_via_skeps(const IntVec& lam, const IntVec& mu, const IntVec& nu);

// Number of minus halves completing gp to a skep with boundary_1 = lam.
std::uint64_t skep_ext(const PlusGrid& gp, const IntVec& lam);
std::vector<MinusGrid> skep_ext_list(const PlusGrid& gp, const IntVec& lam);

// Plus halves with g_{n0} = 0, diagonal boundary nu and outer boundary pi
// that satisfy the monotonicity along NE diagonals and the edge bounds every
// skep obeys. A superset of the halves that extend to some skep.
std::vector<PlusGrid> enumerate_gplus(const IntVec& nu, const IntVec& pi);

// Sum over enumerate_gplus(nu, lam + mu) of skep_ext(gp, lam).
std::uint64_t lr_via_sum(const IntVec& lam, const IntVec& mu, const IntVec& nu);

}  // namespace lrskep
