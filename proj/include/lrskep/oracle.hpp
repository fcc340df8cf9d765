#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lrskep/core.hpp"

namespace lrskep {

// Number of semistandard fillings of nu/lam with content mu whose reverse
// reading word is a ballot sequence. Inputs are partitions of any lengths.
std::uint64_t lr_tableaux(const IntVec& lam, const IntVec& mu, const IntVec& nu);

// Finite Schur-basis combination. Keys are partitions without trailing zeros;
// zero coefficients are never stored.
class SchurExpansion {
 public:
  SchurExpansion() = default;
  static SchurExpansion schur(const IntVec& lam, Int coeff = 1);

  Int coeff(const IntVec& lam) const;
  void add_term(const IntVec& lam, Int coeff);
  const std::map<IntVec, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool is_nonnegative() const;
  std::string str() const;

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;
  friend auto operator<=>(const SchurExpansion& a, const SchurExpansion& b) { return a.terms_ <=> b.terms_; }

 private:
  std::map<IntVec, Int> terms_;
};

SchurExpansion operator+(const SchurExpansion& a, const SchurExpansion& b);
SchurExpansion operator-(const SchurExpansion& a, const SchurExpansion& b);
SchurExpansion operator*(const SchurExpansion& a, const SchurExpansion& b);
SchurExpansion operator*(Int s, const SchurExpansion& a);

// s_lam * s_mu.
SchurExpansion schur_product(const IntVec& lam, const IntVec& mu);

// A function Z^n -> Schur expansions that is invariant under x -> x + 1_n.
// Stored on representatives with first coordinate 0; missing points are 0.
class SchurFunc {
 public:
  explicit SchurFunc(std::size_t n) : n_(n) {}
  std::size_t dim() const { return n_; }
  void set(const IntVec& x, SchurExpansion e);
  SchurExpansion operator()(const IntVec& x) const;
  IntVec normalize(const IntVec& x) const;

 private:
  std::size_t n_;
  std::map<IntVec, SchurExpansion> values_;
};

enum class SchurMode { s1, s2, s3, s4 };
const char* to_string(SchurMode m);

struct SchurViolation {
  // (x, y, x', y') for 1S-3S; (x, x+e_I, x+e_J, x+e_I+e_J) for 4S, or
  // (x, y, meet, join) when the 4S support condition fails.
  std::vector<IntVec> points;
  bool support_failure = false;
  // Must be Schur nonnegative: f(x')f(y') - f(x)f(y), or the 4S analogue.
  SchurExpansion difference;
};

struct SchurReport {
  bool ok = true;
  std::uint64_t checked = 0;
  std::vector<SchurViolation> violations;
};

// Checks the selected Schur condition for all x, y in the window. Points the
// condition derives from x and y are evaluated through 1_n-invariance, so
// they need not lie in the window.
SchurReport schur_llc_check(const SchurFunc& f, const IntVec& lo, const IntVec& hi, SchurMode mode,
                            std::size_t max_violations = 64);

}  // namespace lrskep
