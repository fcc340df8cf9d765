#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrskep/core.hpp"
#include "lrskep/grid.hpp"
#include "lrskep/io.hpp"
#include "lrskep/lconvex.hpp"

namespace lrskep {

class Incomparable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Status { pass, fail, skipped };
const char* to_string(Status s);

struct VerifyReport {
  std::string check;     // campaign name, e.g. "lpp"
  std::string instance;  // reproducible descriptor of the inputs
  Status status = Status::pass;
  bool experimental = false;  // findings that never count as failures
  std::uint64_t checked = 0;
  Json witness;  // null unless status == fail
  std::string detail;

  bool failed() const { return status == Status::fail && !experimental; }
};

Json to_json(const VerifyReport& r);
// One line, no trailing newline.
std::string to_json_line(const VerifyReport& r);
std::string to_table_line(const VerifyReport& r);

// Compares c_{lam mu}^nu with c_{lam2 mu2}^nu for every nu, after padding all
// four partitions with n zeros.
VerifyReport verify_lpp(const IntVec& lam, const IntVec& mu, const IntVec& lam2, const IntVec& mu2);

// verify_lpp over all partition pairs with n parts and entries <= max_entry,
// against every partition pair (lam2, mu2) with lam2 in Pi(lam, mu) and
// lam2 + mu2 = lam + mu. jobs > 1 spreads the counting over threads.
VerifyReport sweep_lpp(std::size_t n, Int max_entry, unsigned jobs = 1);

VerifyReport verify_better_lpp(const PlusGrid& gp, const IntVec& lam, const IntVec& lam2);

// Equality of skep_ext at lam and at boundary_plus(gp) - lam for every lam in
// the window, and that skep_flip maps the one set of extensions onto the
// other.
VerifyReport verify_skep_commutative(const PlusGrid& gp, const Box& window);
// Window [min(0, pi) - 1, max(0, pi) + 1] with pi = boundary_plus(gp).
Box default_commutative_window(const PlusGrid& gp);
VerifyReport verify_skep_commutative(const PlusGrid& gp);

// Pairs and parallelogram L-log-concavity of lam -> skep_ext(gp, lam) on the
// window, plus invariance under lam -> lam + 1_n.
VerifyReport verify_skepext_llc(const PlusGrid& gp, const Box& window);

// Every pair strictly below (lam, mu) lies below one of covers(lam, mu).
// Skipped when the spread of mu - lam exceeds bound.
VerifyReport verify_covers(const IntVec& lam, const IntVec& mu, Int bound);

// lam -> c_{lam, pi - lam}^nu on the window (0 where either index is not a
// partition). Always experimental.
VerifyReport probe_question(const IntVec& pi, const IntVec& nu, const Box& window);

// Hive, skep, plus-half sum and tableau counts agree for every lam, mu with n
// parts and entries <= max_entry and every nu with at most n parts.
VerifyReport cross_check_counts(std::size_t n, Int max_entry, unsigned jobs = 1);

// Distinct plus halves of enumerate_gplus(nu, lam + mu) over lam, mu with n
// parts and entries <= max_entry and nu with at most n parts. Sorted.
std::vector<PlusGrid> gplus_sweep(std::size_t n, Int max_entry);
// count distinct members of gplus_sweep, chosen by a seeded Fisher-Yates
// pass; all of them when count exceeds the sweep.
std::vector<PlusGrid> sample_gplus(std::size_t n, Int max_entry, std::size_t count, std::uint64_t seed);

// For every (lam, mu, nu) of the sweep and every gp in
// enumerate_gplus(nu, lam + mu): SkepExt(gp, lam) = SkepExt(gp, mu), and
// SkepExt(gp, lam) <= SkepExt(gp, lam2) for each representative lam2 of
// Pi(lam, mu).
VerifyReport sweep_skep_theorems(std::size_t n, Int max_entry, unsigned jobs = 1);

// The lam2 with lam2 + mu2 = lam + mu, lam2 in Pi(lam, mu), and both lam2
// and mu2 partitions. Sorted.
std::vector<IntVec> comparable_partitions(const IntVec& lam, const IntVec& mu);

}  // namespace lrskep
