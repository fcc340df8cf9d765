#include "lrskep/core.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace lrskep {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
  return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int IntVec::sum() const {
  Int s = 0;
  for (Int x : v_) s = checked_add(s, x);
  return s;
}

Int IntVec::max() const {
  if (v_.empty()) throw std::invalid_argument("max of empty vector");
  return *std::max_element(v_.begin(), v_.end());
}

Int IntVec::min() const {
  if (v_.empty()) throw std::invalid_argument("min of empty vector");
  return *std::min_element(v_.begin(), v_.end());
}

void require_same_length(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

IntVec& IntVec::operator+=(const IntVec& o) {
  require_same_length(*this, o);
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] = checked_add(v_[k], o.v_[k]);
  return *this;
}

IntVec& IntVec::operator-=(const IntVec& o) {
  require_same_length(*this, o);
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] = checked_sub(v_[k], o.v_[k]);
  return *this;
}

IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }

IntVec operator-(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = checked_neg(a[k]);
  return r;
}

IntVec operator*(Int s, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = checked_mul(s, a[k]);
  return r;
}

IntVec ones(std::size_t n) { return IntVec(n, 1); }

IntVec indicator(std::size_t n, const std::vector<std::size_t>& s) {
  IntVec r(n);
  for (std::size_t k : s) {
    if (k >= n) throw std::out_of_range("index " + std::to_string(k) + " outside dimension " + std::to_string(n));
    r[k] = 1;
  }
  return r;
}

bool is_partition(const IntVec& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0) return false;
    if (k + 1 < v.size() && v[k] < v[k + 1]) return false;
  }
  return true;
}

void require_partition(const IntVec& v, std::string_view what) {
  if (!is_partition(v)) {
    throw std::invalid_argument(std::string(what) + " is not a partition: " + to_string(v));
  }
}

IntVec pad(const IntVec& v, std::size_t k) {
  std::vector<Int> r = v.data();
  r.resize(r.size() + k, 0);
  return IntVec(std::move(r));
}

IntVec strip_zeros(const IntVec& v) {
  std::vector<Int> r = v.data();
  while (!r.empty() && r.back() == 0) r.pop_back();
  return IntVec(std::move(r));
}

std::string to_string(const IntVec& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

IntVec parse_intvec(std::string_view text) {
  std::vector<Int> r;
  if (text.empty()) return IntVec();
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    Int x = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size()) {
      throw ParseError("bad integer list: '" + std::string(text) + "'");
    }
    r.push_back(x);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntVec(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) { return os << '(' << to_string(v) << ')'; }

namespace {

void partitions_rec(std::vector<Int>& cur, std::size_t k, Int cap, std::vector<IntVec>& out) {
  if (k == cur.size()) {
    out.emplace_back(cur);
    return;
  }
  for (Int x = cap; x >= 0; --x) {
    cur[k] = x;
    partitions_rec(cur, k + 1, x, out);
  }
}

void partitions_of_rec(std::vector<Int>& cur, std::size_t k, Int left, Int cap,
                       std::vector<IntVec>& out) {
  if (left == 0) {
    for (std::size_t r = k; r < cur.size(); ++r) cur[r] = 0;
    out.emplace_back(cur);
    return;
  }
  if (k == cur.size()) return;
  // Remaining parts cannot exceed cap each.
  Int room = checked_mul(cap, static_cast<Int>(cur.size() - k));
  if (room < left) return;
  for (Int x = std::min(cap, left); x >= 1; --x) {
    cur[k] = x;
    partitions_of_rec(cur, k + 1, left - x, x, out);
  }
}

}  // namespace

std::vector<IntVec> partitions_in_box(std::size_t n, Int max_entry) {
  std::vector<IntVec> out;
  if (max_entry < 0) return out;
  std::vector<Int> cur(n, 0);
  partitions_rec(cur, 0, max_entry, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> partitions_of(Int total, std::size_t max_parts, Int max_part) {
  std::vector<IntVec> out;
  if (total < 0 || max_part < 0) return out;
  std::vector<Int> cur(max_parts, 0);
  partitions_of_rec(cur, 0, total, max_part, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> box_points(const IntVec& lo, const IntVec& hi) {
  require_same_length(lo, hi);
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (lo[k] > hi[k]) return out;
  }
  IntVec cur = lo;
  while (true) {
    out.push_back(cur);
    std::size_t k = cur.size();
    while (k > 0) {
      --k;
      if (cur[k] < hi[k]) {
        ++cur[k];
        for (std::size_t r = k + 1; r < cur.size(); ++r) cur[r] = lo[r];
        break;
      }
      if (k == 0) return out;
    }
    if (cur.size() == 0) return out;
  }
}

}  // namespace lrskep
