#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrskep/core.hpp"
#include "lrskep/grid.hpp"

namespace lrskep {

// Points (i,j,t) with i, j >= 0, |t| <= n - i - j and t == i + j + n mod 2.
struct TetraPoint {
  int i = 0;
  int j = 0;
  int t = 0;
  friend bool operator==(const TetraPoint&, const TetraPoint&) = default;
  friend auto operator<=>(const TetraPoint&, const TetraPoint&) = default;
};

bool in_tetra(int n, int i, int j, int t);
std::vector<TetraPoint> tetra_points(int n);

class TetraFunc {
 public:
  TetraFunc() : TetraFunc(0) {}
  explicit TetraFunc(int n);

  int n() const { return n_; }
  bool contains(int i, int j, int t) const { return in_tetra(n_, i, j, t); }
  Int at(int i, int j, int t) const;
  void set(int i, int j, int t, Int v);
  Int operator()(const TetraPoint& p) const { return at(p.i, p.j, p.t); }

  friend bool operator==(const TetraFunc&, const TetraFunc&) = default;

 private:
  std::size_t index(int i, int j, int t) const;
  int n_;
  std::vector<std::size_t> offset_;
  std::vector<Int> v_;
};

enum class SliceKind { hive_top, hive_bottom, skep_top, skep_bottom };

const char* to_string(SliceKind s);
// The t coordinate of the slice above (i,j).
int slice_t(SliceKind s, int n, int i, int j);

// The unique function on T_n that agrees with init on the slice and obeys the
// octahedron recurrence.
TetraFunc propagate(const TriGrid& init, SliceKind from);
TriGrid restrict_to(const TetraFunc& h, SliceKind to);

// Whether h satisfies the recurrence at every (i,j,t) with (i,j,t-2) in T_n.
bool obeys_recurrence(const TetraFunc& h);

// Throw std::invalid_argument on invalid input.
TriGrid hive_to_skep(const TriGrid& h);
TriGrid skep_to_hive(const TriGrid& g);
TriGrid hive_flip(const TriGrid& h);
TriGrid skep_flip(const TriGrid& g);

struct Rhombus {
  TetraPoint long1, long2;    // endpoints of the long diagonal
  TetraPoint short1, short2;  // endpoints of the short diagonal
};

// Every unit rhombus of T_n, deduplicated.
std::vector<Rhombus> unit_rhombi(int n);

struct RhombusCheck {
  bool ok = true;
  std::optional<Rhombus> witness;
  Int lhs = 0;  // long diagonal sum
  Int rhs = 0;  // short diagonal sum
  explicit operator bool() const { return ok; }
};

// h(long1) + h(long2) <= h(short1) + h(short2) for every unit rhombus.
RhombusCheck check_rhombus_all(const TetraFunc& h);

// On the walls i = 0 and j = 0, with d(k,t) = h(k,0,t) for k >= 0 and
// h(0,-k,t) for k <= 0: d(k,t) + d(k,t-2) = d(k-1,t-1) + d(k+1,t-1).
bool check_wall_identity(const TetraFunc& h);

}  // namespace lrskep
