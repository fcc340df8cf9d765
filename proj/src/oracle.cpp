#include "lrskep/oracle.hpp"

#include <algorithm>

#include "lrskep/lattice.hpp"

namespace lrskep {

namespace {

class LrFiller {
 public:
  LrFiller(std::vector<Int> lam, std::vector<Int> mu, std::vector<Int> nu)
      : lam_(std::move(lam)), mu_(std::move(mu)), nu_(std::move(nu)), cnt_(mu_.size() + 1, 0) {
    lam_.resize(nu_.size(), 0);
    for (Int len : nu_) rows_.emplace_back(static_cast<std::size_t>(len), 0);
  }

  std::uint64_t run() {
    total_ = 0;
    next_from(0, nu_.empty() ? 0 : nu_[0] - 1);
    return total_;
  }

 private:
  // Moves to the next cell at or after (r, c) in reading order.
  void next_from(std::size_t r, Int c) {
    while (r < nu_.size() && c < lam_[r]) {
      ++r;
      if (r < nu_.size()) c = nu_[r] - 1;
    }
    if (r == nu_.size()) {
      ++total_;
      return;
    }
    place(r, c);
  }

  void place(std::size_t r, Int c) {
    Int hi = static_cast<Int>(mu_.size());
    if (c + 1 < nu_[r]) hi = std::min(hi, rows_[r][c + 1]);
    Int lo = 1;
    if (r > 0 && c >= lam_[r - 1]) lo = rows_[r - 1][c] + 1;
    for (Int v = lo; v <= hi; ++v) {
      if (cnt_[v] >= mu_[v - 1]) continue;
      if (v > 1 && cnt_[v] + 1 > cnt_[v - 1]) continue;
      ++cnt_[v];
      rows_[r][c] = v;
      next_from(r, c - 1);
      --cnt_[v];
    }
    rows_[r][c] = 0;
  }

  std::vector<Int> lam_, mu_, nu_;
  std::vector<std::vector<Int>> rows_;
  std::vector<Int> cnt_;
  std::uint64_t total_ = 0;
};

}  // namespace

std::uint64_t lr_tableaux(const IntVec& lam, const IntVec& mu, const IntVec& nu) {
  require_partition(lam, "lambda");
  require_partition(mu, "mu");
  require_partition(nu, "nu");
  IntVec l = strip_zeros(lam), m = strip_zeros(mu), v = strip_zeros(nu);
  if (v.sum() != checked_add(l.sum(), m.sum())) return 0;
  if (l.size() > v.size()) return 0;
  for (std::size_t r = 0; r < l.size(); ++r)
    if (l[r] > v[r]) return 0;
  return LrFiller(l.data(), m.data(), v.data()).run();
}

SchurExpansion SchurExpansion::schur(const IntVec& lam, Int coeff) {
  SchurExpansion e;
  e.add_term(lam, coeff);
  return e;
}

Int SchurExpansion::coeff(const IntVec& lam) const {
  auto it = terms_.find(strip_zeros(lam));
  return it == terms_.end() ? 0 : it->second;
}

void SchurExpansion::add_term(const IntVec& lam, Int coeff) {
  require_partition(lam, "Schur index");
  if (coeff == 0) return;
  IntVec key = strip_zeros(lam);
  Int& c = terms_[key];
  c = checked_add(c, coeff);
  if (c == 0) terms_.erase(key);
}

bool SchurExpansion::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second >= 0; });
}

std::string SchurExpansion::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [lam, c] : terms_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Int a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += "s(" + to_string(lam) + ")";
  }
  return s;
}

SchurExpansion operator+(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion r = a;
  for (const auto& [lam, c] : b.terms()) r.add_term(lam, c);
  return r;
}

SchurExpansion operator-(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion r = a;
  for (const auto& [lam, c] : b.terms()) r.add_term(lam, checked_neg(c));
  return r;
}

SchurExpansion operator*(Int s, const SchurExpansion& a) {
  SchurExpansion r;
  for (const auto& [lam, c] : a.terms()) r.add_term(lam, checked_mul(s, c));
  return r;
}

SchurExpansion schur_product(const IntVec& lam, const IntVec& mu) {
  require_partition(lam, "lambda");
  require_partition(mu, "mu");
  thread_local std::map<std::pair<IntVec, IntVec>, SchurExpansion> memo;
  IntVec l = strip_zeros(lam), m = strip_zeros(mu);
  auto key = std::make_pair(l, m);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  SchurExpansion e;
  Int total = checked_add(l.sum(), m.sum());
  Int widest = checked_add(l.empty() ? 0 : l[0], m.empty() ? 0 : m[0]);
  for (const IntVec& nu : partitions_of(total, l.size() + m.size(), widest)) {
    std::uint64_t c = lr_tableaux(l, m, nu);
    if (c) e.add_term(nu, static_cast<Int>(c));
  }
  memo.emplace(std::move(key), e);
  return e;
}

SchurExpansion operator*(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion r;
  for (const auto& [l, x] : a.terms())
    for (const auto& [m, y] : b.terms())
      r = r + checked_mul(x, y) * schur_product(l, m);
  return r;
}

IntVec SchurFunc::normalize(const IntVec& x) const {
  if (x.size() != n_) throw LengthMismatch("point dimension does not match function");
  if (x.empty()) return x;
  return x - x[0] * ones(n_);
}

void SchurFunc::set(const IntVec& x, SchurExpansion e) {
  IntVec key = normalize(x);
  if (e.empty())
    values_.erase(key);
  else
    values_[key] = std::move(e);
}

SchurExpansion SchurFunc::operator()(const IntVec& x) const {
  auto it = values_.find(normalize(x));
  return it == values_.end() ? SchurExpansion() : it->second;
}

const char* to_string(SchurMode m) {
  switch (m) {
    case SchurMode::s1: return "1S";
    case SchurMode::s2: return "2S";
    case SchurMode::s3: return "3S";
    case SchurMode::s4: return "4S";
  }
  return "?";
}

SchurReport schur_llc_check(const SchurFunc& f, const IntVec& lo, const IntVec& hi, SchurMode mode,
                            std::size_t max_violations) {
  SchurReport rep;
  std::map<std::pair<SchurExpansion, SchurExpansion>, SchurExpansion> products;
  auto prod = [&](const SchurExpansion& a, const SchurExpansion& b) -> SchurExpansion {
    if (a.empty() || b.empty()) return {};
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = products.find(key);
    if (it == products.end()) it = products.emplace(key, a * b).first;
    return it->second;
  };
  auto record = [&](std::vector<IntVec> pts, SchurExpansion diff, bool support) {
    rep.ok = false;
    if (rep.violations.size() < max_violations)
      rep.violations.push_back({std::move(pts), support, std::move(diff)});
  };
  std::vector<IntVec> support;
  for (const IntVec& x : box_points(lo, hi))
    if (!f(x).empty()) support.push_back(x);
  std::size_t n = lo.size();

  if (mode == SchurMode::s4) {
    for (std::size_t a = 0; a < support.size(); ++a) {
      for (std::size_t b = a + 1; b < support.size(); ++b) {
        ++rep.checked;
        IntVec m = meet(support[a], support[b]), j = join(support[a], support[b]);
        if (f(m).empty() || f(j).empty()) record({support[a], support[b], m, j}, {}, true);
      }
    }
    for (const IntVec& x : support) {
      for (std::size_t J = 1; J < (std::size_t{1} << n); ++J) {
        for (std::size_t I = J;; I = (I - 1) & J) {
          IntVec eI(n), eJ(n);
          for (std::size_t k = 0; k < n; ++k) {
            eI[k] = (I >> k) & 1;
            eJ[k] = (J >> k) & 1;
          }
          IntVec p = x + eI, q = x + eJ, c = x + eI + eJ;
          ++rep.checked;
          SchurExpansion d = prod(f(p), f(q)) - prod(f(x), f(c));
          if (!d.is_nonnegative()) record({x, p, q, c}, d, false);
          if (I == 0) break;
        }
      }
    }
    return rep;
  }

  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a; b < support.size(); ++b) {
      const IntVec& x = support[a];
      const IntVec& y = support[b];
      SchurExpansion base = prod(f(x), f(y));
      auto test = [&](const IntVec& p, const IntVec& q) {
        ++rep.checked;
        SchurExpansion d = prod(f(p), f(q)) - base;
        if (!d.is_nonnegative()) record({x, y, p, q}, d, false);
      };
      if (mode == SchurMode::s1) {
        for (const IntVec& p : pi_enumerate(x, y)) test(p, x + y - p);
      } else if (mode == SchurMode::s2) {
        test(meet(x, y), join(x, y));
      } else {
        test(floor_avg(x, y), ceil_avg(x, y));
      }
    }
  }
  return rep;
}

}  // namespace lrskep
