#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lrskep {

using Int = std::int64_t;

// Arithmetic that throws std::overflow_error instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-length integer vector. Arithmetic is only defined between equal
// lengths and is overflow-checked.
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(std::size_t n, Int fill = 0) : v_(n, fill) {}
  IntVec(std::initializer_list<Int> init) : v_(init) {}
  explicit IntVec(std::vector<Int> v) : v_(std::move(v)) {}

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  Int operator[](std::size_t k) const { return v_[k]; }
  Int& operator[](std::size_t k) { return v_[k]; }
  Int at(std::size_t k) const { return v_.at(k); }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  auto begin() { return v_.begin(); }
  auto end() { return v_.end(); }

  const std::vector<Int>& data() const { return v_; }

  Int sum() const;
  Int max() const;
  Int min() const;

  IntVec& operator+=(const IntVec& o);
  IntVec& operator-=(const IntVec& o);

  friend bool operator==(const IntVec&, const IntVec&) = default;
  friend auto operator<=>(const IntVec& a, const IntVec& b) { return a.v_ <=> b.v_; }

 private:
  std::vector<Int> v_;
};

IntVec operator+(IntVec a, const IntVec& b);
IntVec operator-(IntVec a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(Int s, const IntVec& a);

void require_same_length(const IntVec& a, const IntVec& b);

// The all-ones vector 1_n.
IntVec ones(std::size_t n);
// e_S for a set of 0-based indices.
IntVec indicator(std::size_t n, const std::vector<std::size_t>& s);

bool is_partition(const IntVec& v);
void require_partition(const IntVec& v, std::string_view what);
// Appends k zeros.
IntVec pad(const IntVec& v, std::size_t k);
// Drops trailing zeros.
IntVec strip_zeros(const IntVec& v);

// "4,2,1,0" form, used by the CLI and in report descriptors.
std::string to_string(const IntVec& v);
IntVec parse_intvec(std::string_view text);
std::ostream& operator<<(std::ostream& os, const IntVec& v);

// All partitions with exactly n parts (zeros allowed) and entries <= max_entry,
// in lexicographic order.
std::vector<IntVec> partitions_in_box(std::size_t n, Int max_entry);
// All partitions of total with at most max_parts parts and largest part at
// most max_part, padded with zeros to length max_parts.
std::vector<IntVec> partitions_of(Int total, std::size_t max_parts, Int max_part);

// All integer points of the box [lo, hi], lexicographic.
std::vector<IntVec> box_points(const IntVec& lo, const IntVec& hi);

}  // namespace lrskep
