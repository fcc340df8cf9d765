#include "lrskep/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <thread>

#include "lrskep/hive.hpp"
#include "lrskep/lattice.hpp"
#include "lrskep/octahedron.hpp"
#include "lrskep/oracle.hpp"
#include "lrskep/skep.hpp"

namespace lrskep {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Json to_json(const VerifyReport& r) {
  return {{"check", r.check},   {"instance", r.instance},         {"status", to_string(r.status)},
          {"checked", r.checked}, {"experimental", r.experimental}, {"witness", r.witness},
          {"detail", r.detail}};
}

std::string to_json_line(const VerifyReport& r) { return to_json(r).dump(); }

std::string to_table_line(const VerifyReport& r) {
  std::string s = r.check + "\t" + to_string(r.status);
  if (r.experimental) s += " (experimental)";
  s += "\tchecked=" + std::to_string(r.checked) + "\t" + r.instance;
  if (!r.detail.empty()) s += "\t" + r.detail;
  if (!r.witness.is_null()) s += "\twitness=" + r.witness.dump();
  return s;
}

namespace {

// Runs f(0), ..., f(count - 1) on up to `jobs` threads; results keep index
// order.
template <class F>
auto parallel_map(std::size_t count, unsigned jobs, F f) -> std::vector<decltype(f(std::size_t{}))> {
  std::vector<decltype(f(std::size_t{}))> out(count);
  unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) out[k] = f(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          out[k] = f(k);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

std::string describe(std::initializer_list<std::pair<const char*, std::string>> parts) {
  std::string s;
  for (const auto& [k, v] : parts) {
    if (!s.empty()) s += " ";
    s += std::string(k) + "=" + v;
  }
  return s;
}

std::string describe_box(const Box& b) { return "[" + to_string(b.lo) + ".." + to_string(b.hi) + "]"; }

void fail_with(VerifyReport& r, Json witness, std::string detail) {
  if (r.status == Status::fail) return;
  r.status = Status::fail;
  r.witness = std::move(witness);
  r.detail = std::move(detail);
}

void merge_into(VerifyReport& total, const VerifyReport& part) {
  total.checked += part.checked;
  if (part.status == Status::fail) fail_with(total, part.witness, part.instance + ": " + part.detail);
}

Json points_json(const std::vector<IntVec>& pts) {
  Json a = Json::array();
  for (const IntVec& p : pts) a.push_back(to_json(p));
  return a;
}

void require_comparable(const IntVec& lam, const IntVec& mu, const IntVec& lam2, const IntVec& mu2) {
  require_same_length(lam, mu);
  require_same_length(lam, lam2);
  require_same_length(lam, mu2);
  if (lam + mu != lam2 + mu2) throw Incomparable("lam + mu differs from lam2 + mu2");
  if (!pi_contains(lam, mu, lam2)) throw Incomparable("lam2 is not in Pi(lam, mu)");
}

// Counts c_{lam mu}^nu for padded inputs; the cache is shared across threads.
class LrCache {
 public:
  std::uint64_t get(const IntVec& lam, const IntVec& mu, const IntVec& nu) {
    auto key = std::make_tuple(lam, mu, nu);
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    std::uint64_t c = lr_via_skeps(lam, mu, nu);
    std::lock_guard lock(mu_);
    memo_.emplace(std::move(key), c);
    return c;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<IntVec, IntVec, IntVec>, std::uint64_t> memo_;
};

// Padding with n zeros keeps every nu in range, but the padded quadruple
// only satisfies the hypothesis when lam2 is in Pi of the padded pair. For
// the other 1_n-translates the comparison is made in Z^n.
VerifyReport lpp_compare(const IntVec& lam, const IntVec& mu, const IntVec& lam2, const IntVec& mu2, LrCache& cache) {
  VerifyReport r;
  r.check = "lpp";
  r.instance = describe({{"lam", to_string(lam)}, {"mu", to_string(mu)}, {"lam2", to_string(lam2)}, {"mu2", to_string(mu2)}});
  std::size_t n = lam.size();
  IntVec l = pad(lam, n), m = pad(mu, n), l2 = pad(lam2, n), m2 = pad(mu2, n);
  if (!pi_contains(l, m, l2)) {
    l = lam, m = mu, l2 = lam2, m2 = mu2;
  }
  r.detail = "nu with at most " + std::to_string(l.size()) + " parts";
  Int widest = n ? checked_add(lam[0], mu[0]) : 0;
  for (const IntVec& nu : partitions_of(checked_add(lam.sum(), mu.sum()), l.size(), widest)) {
    ++r.checked;
    std::uint64_t c = cache.get(l, m, nu);
    if (c == 0) continue;
    std::uint64_t c2 = cache.get(l2, m2, nu);
    if (c > c2) {
      r.detail.clear();
      fail_with(r,
                {{"lam", to_json(lam)}, {"mu", to_json(mu)}, {"lam2", to_json(lam2)}, {"mu2", to_json(mu2)},
                 {"nu", to_json(nu)}, {"c", c}, {"c2", c2}},
                "c(lam,mu;nu) = " + std::to_string(c) + " > c(lam2,mu2;nu) = " + std::to_string(c2));
      return r;
    }
  }
  return r;
}

}  // namespace

std::vector<IntVec> comparable_partitions(const IntVec& lam, const IntVec& mu) {
  require_same_length(lam, mu);
  std::vector<IntVec> out;
  if (lam.empty()) return {lam};
  IntVec pi = lam + mu;
  for (const IntVec& r : pi_enumerate(lam, mu)) {
    Int lo = checked_neg(r.min());
    Int hi = (pi - r).min();
    for (Int t = lo; t <= hi; ++t) {
      IntVec l2 = r + t * ones(r.size());
      if (is_partition(l2) && is_partition(pi - l2)) out.push_back(std::move(l2));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VerifyReport verify_lpp(const IntVec& lam, const IntVec& mu, const IntVec& lam2, const IntVec& mu2) {
  require_partition(lam, "lambda");
  require_partition(mu, "mu");
  require_partition(lam2, "lambda'");
  require_partition(mu2, "mu'");
  require_comparable(lam, mu, lam2, mu2);
  LrCache cache;
  return lpp_compare(lam, mu, lam2, mu2, cache);
}

VerifyReport sweep_lpp(std::size_t n, Int max_entry, unsigned jobs) {
  VerifyReport total;
  total.check = "sweep-lpp";
  total.instance = describe({{"n", std::to_string(n)}, {"max_entry", std::to_string(max_entry)}});
  std::vector<IntVec> parts = partitions_in_box(n, max_entry);
  std::vector<std::pair<IntVec, IntVec>> pairs;
  for (const IntVec& l : parts)
    for (const IntVec& m : parts) pairs.emplace_back(l, m);
  LrCache cache;
  auto results = parallel_map(pairs.size(), jobs, [&](std::size_t k) {
    const auto& [lam, mu] = pairs[k];
    VerifyReport part;
    part.check = "lpp";
    for (const IntVec& l2 : comparable_partitions(lam, mu)) {
      VerifyReport r = lpp_compare(lam, mu, l2, lam + mu - l2, cache);
      merge_into(part, r);
      if (r.status == Status::fail) part.instance = r.instance;
    }
    return part;
  });
  for (const VerifyReport& r : results) merge_into(total, r);
  return total;
}

VerifyReport verify_better_lpp(const PlusGrid& gp, const IntVec& lam, const IntVec& lam2) {
  IntVec pi = boundary_plus(gp);
  require_same_length(pi, lam);
  require_same_length(pi, lam2);
  IntVec mu = pi - lam, mu2 = pi - lam2;
  require_comparable(lam, mu, lam2, mu2);
  VerifyReport r;
  r.check = "better-lpp";
  r.instance = describe({{"gplus", to_json(gp).dump()}, {"lam", to_string(lam)}, {"lam2", to_string(lam2)}});
  std::uint64_t a = skep_ext(gp, lam), b = skep_ext(gp, lam2);
  r.checked = 1;
  if (a > b) {
    fail_with(r, {{"lam", to_json(lam)}, {"lam2", to_json(lam2)}, {"ext", a}, {"ext2", b}},
              "SkepExt(lam) = " + std::to_string(a) + " > SkepExt(lam2) = " + std::to_string(b));
  }
  return r;
}

Box default_commutative_window(const PlusGrid& gp) {
  IntVec pi = boundary_plus(gp);
  Box b{IntVec(pi.size()), IntVec(pi.size())};
  for (std::size_t k = 0; k < pi.size(); ++k) {
    b.lo[k] = std::min<Int>(0, pi[k]) - 1;
    b.hi[k] = std::max<Int>(0, pi[k]) + 1;
  }
  return b;
}

VerifyReport verify_skep_commutative(const PlusGrid& gp) { return verify_skep_commutative(gp, default_commutative_window(gp)); }

VerifyReport verify_skep_commutative(const PlusGrid& gp, const Box& window) {
  IntVec pi = boundary_plus(gp);
  require_same_length(pi, window.lo);
  VerifyReport r;
  r.check = "commutative";
  r.instance = describe({{"gplus", to_json(gp).dump()}, {"window", describe_box(window)}});
  for (const IntVec& lam : window.points()) {
    ++r.checked;
    IntVec mu = pi - lam;
    std::vector<MinusGrid> a = skep_ext_list(gp, lam);
    std::vector<MinusGrid> b = skep_ext_list(gp, mu);
    if (a.size() != b.size()) {
      fail_with(r, {{"lam", to_json(lam)}, {"mu", to_json(mu)}, {"ext_lam", a.size()}, {"ext_mu", b.size()}},
                "SkepExt(lam) != SkepExt(mu)");
      return r;
    }
    std::set<MinusGrid> targets(b.begin(), b.end());
    for (const MinusGrid& gm : a) {
      TriGrid g = interweave(gp, gm);
      TriGrid f = skep_flip(g);
      SplitGrid s = split(f);
      std::string problem;
      if (s.plus != gp)
        problem = "flip changed the plus half";
      else if (boundary_1(f) != mu)
        problem = "flip does not send lam to mu";
      else if (!targets.erase(s.minus))
        problem = "flip is not injective onto the extensions of mu";
      else if (skep_flip(f) != g)
        problem = "flip is not an involution here";
      if (!problem.empty()) {
        fail_with(r, {{"lam", to_json(lam)}, {"skep", to_json(g)}, {"flipped", to_json(f)}}, problem);
        return r;
      }
    }
  }
  return r;
}

VerifyReport verify_skepext_llc(const PlusGrid& gp, const Box& window) {
  VerifyReport r;
  r.check = "skepext-llc";
  r.instance = describe({{"gplus", to_json(gp).dump()}, {"window", describe_box(window)}});
  WindowFunc f(window, [&](const IntVec& lam) { return static_cast<Int>(skep_ext(gp, lam)); });
  for (FuncMode mode : {FuncMode::pairs, FuncMode::parallelogram}) {
    WindowReport w = check_llog_concave_window(f, mode);
    r.checked += w.checked;
    if (!w.ok) {
      Json vals = Json::array();
      for (const IntVec& p : w.witness) vals.push_back(f.contains(p) ? f(p) : static_cast<Int>(skep_ext(gp, p)));
      fail_with(r, {{"mode", to_string(mode)}, {"points", points_json(w.witness)}, {"values", vals}}, w.detail);
      return r;
    }
  }
  IntVec one = ones(window.dim());
  for (const IntVec& lam : window.points()) {
    ++r.checked;
    std::uint64_t a = static_cast<std::uint64_t>(f(lam)), b = skep_ext(gp, lam + one);
    if (a != b) {
      fail_with(r, {{"lam", to_json(lam)}, {"ext", a}, {"ext_shifted", b}}, "SkepExt changes under lam -> lam + 1");
      return r;
    }
  }
  return r;
}

VerifyReport verify_covers(const IntVec& lam, const IntVec& mu, Int bound) {
  require_same_length(lam, mu);
  VerifyReport r;
  r.check = "covers";
  r.instance = describe({{"lam", to_string(lam)}, {"mu", to_string(mu)}, {"bound", std::to_string(bound)}});
  std::size_t n = lam.size();
  if (n == 0) return r;
  IntVec pi = lam + mu, d = delta_coords(lam, mu);
  Int spread = checked_sub(d.max(), d.min());
  if (spread > bound) {
    r.status = Status::skipped;
    r.detail = "spread of mu - lam is " + std::to_string(spread) + ", above the bound";
    return r;
  }
  auto cov = covers(lam, mu);
  for (const auto& [a, b] : cov) {
    if (!pair_leq(a, b, lam, mu) || pair_leq(lam, mu, a, b)) {
      fail_with(r, {{"cover_lam", to_json(a)}, {"cover_mu", to_json(b)}}, "listed cover is not strictly below");
      return r;
    }
  }
  // Every class modulo (lam, mu) -> (lam - c, mu + c) has a representative
  // with d2_0 = d_0. Entries of a smaller d2 stay within spread of d2_0.
  IntVec lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = k == 0 ? d[0] : d[0] - spread;
    hi[k] = k == 0 ? d[0] : d[0] + spread;
  }
  for (const IntVec& d2 : box_points(lo, hi)) {
    bool parity_ok = true;
    for (std::size_t k = 0; k < n; ++k) parity_ok = parity_ok && ((d2[k] - d[k]) % 2 == 0);
    if (!parity_ok || !preorder_leq(d2, d) || preorder_leq(d, d2)) continue;
    ++r.checked;
    auto [l2, m2] = pair_from_delta(pi, d2);
    bool covered = std::any_of(cov.begin(), cov.end(), [&](const auto& c) { return pair_leq(l2, m2, c.first, c.second); });
    if (!covered) {
      fail_with(r, {{"lam2", to_json(l2)}, {"mu2", to_json(m2)}}, "pair strictly below is under no listed cover");
      return r;
    }
  }
  return r;
}

VerifyReport probe_question(const IntVec& pi, const IntVec& nu, const Box& window) {
  require_same_length(pi, nu);
  require_same_length(pi, window.lo);
  VerifyReport r;
  r.check = "probe-question";
  r.experimental = true;
  r.instance = describe({{"pi", to_string(pi)}, {"nu", to_string(nu)}, {"window", describe_box(window)}});
  WindowFunc f(window, [&](const IntVec& lam) -> Int {
    IntVec mu = pi - lam;
    if (!is_partition(lam) || !is_partition(mu) || !is_partition(nu)) return 0;
    return static_cast<Int>(lr_via_skeps(lam, mu, nu));
  });
  for (FuncMode mode : {FuncMode::pairs, FuncMode::parallelogram}) {
    WindowReport w = check_llog_concave_window(f, mode);
    r.checked += w.checked;
    if (!w.ok) {
      fail_with(r, {{"mode", to_string(mode)}, {"points", points_json(w.witness)}}, w.detail);
      break;
    }
  }
  return r;
}

VerifyReport cross_check_counts(std::size_t n, Int max_entry, unsigned jobs) {
  VerifyReport total;
  total.check = "counts";
  total.instance = describe({{"n", std::to_string(n)}, {"max_entry", std::to_string(max_entry)}});
  std::vector<IntVec> parts = partitions_in_box(n, max_entry);
  std::vector<std::pair<IntVec, IntVec>> pairs;
  for (const IntVec& l : parts)
    for (const IntVec& m : parts) pairs.emplace_back(l, m);
  auto results = parallel_map(pairs.size(), jobs, [&](std::size_t k) {
    const auto& [lam, mu] = pairs[k];
    VerifyReport r;
    r.check = "counts";
    r.instance = describe({{"lam", to_string(lam)}, {"mu", to_string(mu)}});
    Int widest = n ? checked_add(lam[0], mu[0]) : 0;
    for (const IntVec& nu : partitions_of(checked_add(lam.sum(), mu.sum()), n, widest)) {
      ++r.checked;
      std::uint64_t h = lr_via_hives(lam, mu, nu), s = lr_via_skeps(lam, mu, nu), t = lr_via_sum(lam, mu, nu),
                    o = lr_tableaux(lam, mu, nu);
      if (h != o || s != o || t != o) {
        fail_with(r,
                  {{"lam", to_json(lam)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}, {"hive", h}, {"skep", s},
                   {"sum", t}, {"oracle", o}},
                  "models disagree");
        break;
      }
    }
    return r;
  });
  for (const VerifyReport& r : results) merge_into(total, r);
  return total;
}

std::vector<PlusGrid> gplus_sweep(std::size_t n, Int max_entry) {
  std::set<PlusGrid> seen;
  std::vector<IntVec> parts = partitions_in_box(n, max_entry);
  for (const IntVec& lam : parts) {
    for (const IntVec& mu : parts) {
      Int widest = n ? checked_add(lam[0], mu[0]) : 0;
      for (const IntVec& nu : partitions_of(checked_add(lam.sum(), mu.sum()), n, widest))
        for (PlusGrid& gp : enumerate_gplus(nu, lam + mu)) seen.insert(std::move(gp));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<PlusGrid> sample_gplus(std::size_t n, Int max_entry, std::size_t count, std::uint64_t seed) {
  std::vector<PlusGrid> all = gplus_sweep(n, max_entry);
  std::mt19937_64 rng(seed);
  std::size_t take = std::min(count, all.size());
  for (std::size_t k = 0; k < take; ++k) {
    std::size_t span = all.size() - k;
    std::size_t j = k + static_cast<std::size_t>(rng() % span);
    std::swap(all[k], all[j]);
  }
  all.resize(take);
  return all;
}

VerifyReport sweep_skep_theorems(std::size_t n, Int max_entry, unsigned jobs) {
  VerifyReport total;
  total.check = "skep-theorems";
  total.instance = describe({{"n", std::to_string(n)}, {"max_entry", std::to_string(max_entry)}});
  std::vector<IntVec> parts = partitions_in_box(n, max_entry);
  std::vector<std::pair<IntVec, IntVec>> pairs;
  for (const IntVec& l : parts)
    for (const IntVec& m : parts) pairs.emplace_back(l, m);
  auto results = parallel_map(pairs.size(), jobs, [&](std::size_t k) {
    const auto& [lam, mu] = pairs[k];
    VerifyReport r;
    r.check = "skep-theorems";
    r.instance = describe({{"lam", to_string(lam)}, {"mu", to_string(mu)}});
    Int widest = n ? checked_add(lam[0], mu[0]) : 0;
    std::vector<IntVec> reps = pi_enumerate(lam, mu);
    for (const IntVec& nu : partitions_of(checked_add(lam.sum(), mu.sum()), n, widest)) {
      for (const PlusGrid& gp : enumerate_gplus(nu, lam + mu)) {
        ++r.checked;
        std::uint64_t a = skep_ext(gp, lam), b = skep_ext(gp, mu);
        if (a != b) {
          fail_with(r, {{"gplus", to_json(gp)}, {"lam", to_json(lam)}, {"ext_lam", a}, {"ext_mu", b}},
                    "SkepExt(lam) != SkepExt(mu)");
          return r;
        }
        for (const IntVec& l2 : reps) {
          ++r.checked;
          std::uint64_t c = skep_ext(gp, l2);
          if (a > c) {
            fail_with(r, {{"gplus", to_json(gp)}, {"lam", to_json(lam)}, {"lam2", to_json(l2)}, {"ext", a}, {"ext2", c}},
                      "SkepExt(lam) > SkepExt(lam2)");
            return r;
          }
        }
      }
    }
    return r;
  });
  for (const VerifyReport& r : results) merge_into(total, r);
  return total;
}

}  // namespace lrskep
