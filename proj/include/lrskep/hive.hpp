#pragma once

#include <cstdint>
#include <vector>

#include "lrskep/core.hpp"
#include "lrskep/grid.hpp"

namespace lrskep {

// Rhombus inequality instances of a hive of side n. Families:
//   1: h(i+1,j) + h(i,j+1) >= h(i,j) + h(i+1,j+1)
//   2: h(i,j+1) + h(i,j)   >= h(i-1,j+1) + h(i+1,j)
//   3: h(i+1,j) + h(i,j)   >= h(i+1,j-1) + h(i,j+1)
std::vector<GridInequality> hive_inequalities(int n);

Validity is_hive(const TriGrid& h);

// Bottom edge differences read right to left: (z_1, ..., z_n).
IntVec boundary_left(const TriGrid& h);
// Left edge differences read bottom to top: (z_{n+1}, ..., z_{2n}).
IntVec boundary_up(const TriGrid& h);

// All hives with h_{n0} = 0 and boundaries (lam, mu, nu). The inputs need
// only share a length; partitions are the case of interest.
std::vector<TriGrid> enumerate_hives(const IntVec& lam, const IntVec& mu, const IntVec& nu);
std::uint64_t count_hives(const IntVec& lam, const IntVec& mu, const IntVec& nu);

// LR coefficient by counting hives. Inputs must be partitions.
std::uint64_t lr_via_hives(const IntVec& lam, const IntVec& mu, const IntVec& nu);

}  // namespace lrskep
