#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>

#include "lrskep/hive.hpp"
#include "lrskep/io.hpp"
#include "lrskep/lattice.hpp"
#include "lrskep/octahedron.hpp"
#include "lrskep/oracle.hpp"
#include "lrskep/skep.hpp"
#include "lrskep/verify.hpp"

namespace lrskep::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "json";
  std::uint64_t seed = 20240501;
  unsigned jobs = 1;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Littlewood-Richardson coefficients via hives and skeps"};
    app.name("lrskep");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg_.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", cfg_.seed, "Seed for sampled campaigns");
    app.add_option("--jobs", cfg_.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);

    add_lr(app);
    add_enumerate(app);
    add_skepext(app);
    add_oct(app);
    add_pi(app);
    add_covers(app);
    add_verify(app);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return 2;
    }
    try {
      return action_();
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return 2;
    }
  }

 private:
  bool json() const { return cfg_.format == "json"; }

  static IntVec vec(const std::string& s) { return parse_intvec(s); }

  void emit(const std::string& line) { out_ << line << "\n"; }

  int emit_reports(const std::vector<VerifyReport>& reports) { return write_reports(reports, json(), out_); }

  void emit_grid(const TriGrid& g) {
    if (json()) {
      emit(to_json(g).dump());
      return;
    }
    auto rows = g.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) emit(to_string(IntVec(*it)));
  }

  static TriGrid load_grid(const std::string& path) { return trigrid_from_json(parse_json(read_file(path))); }
  static PlusGrid load_gplus(const std::string& path) { return plusgrid_from_json(parse_json(read_file(path))); }

  void add_lr(CLI::App& app) {
    auto* sub = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    auto* o = &lr_;
    sub->add_option("--lam", o->lam)->required();
    sub->add_option("--mu", o->mu)->required();
    sub->add_option("--nu", o->nu)->required();
    sub->add_option("--model", o->model)->check(CLI::IsMember({"hive", "skep", "sum", "oracle"}));
    sub->callback([this] {
      action_ = [this] {
        IntVec lam = vec(lr_.lam), mu = vec(lr_.mu), nu = vec(lr_.nu);
        std::uint64_t c = 0;
        if (lr_.model == "hive")
          c = lr_via_hives(lam, mu, nu);
        else if (lr_.model == "skep")
          c = lr_via_skeps(lam, mu, nu);
        else if (lr_.model == "sum")
          c = lr_via_sum(lam, mu, nu);
        else
          c = lr_tableaux(lam, mu, nu);
        if (json())
          emit(Json{{"lam", to_json(lam)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}, {"model", lr_.model}, {"coefficient", c}}.dump());
        else
          emit(std::to_string(c));
        return 0;
      };
    });
  }

  void add_enumerate(CLI::App& app) {
    auto* sub = app.add_subcommand("enumerate", "List all hives or skeps with given boundary");
    sub->add_option("kind", en_.kind)->required()->check(CLI::IsMember({"hives", "skeps"}));
    sub->add_option("--lam", en_.lam)->required();
    sub->add_option("--mu", en_.mu)->required();
    sub->add_option("--nu", en_.nu)->required();
    sub->add_option("--out", en_.out, "Write the JSON list here instead of stdout");
    sub->callback([this] {
      action_ = [this] {
        IntVec lam = vec(en_.lam), mu = vec(en_.mu), nu = vec(en_.nu);
        std::vector<TriGrid> grids = en_.kind == "hives" ? enumerate_hives(lam, mu, nu) : enumerate_skeps(lam, mu, nu);
        Json list = Json::array();
        for (const TriGrid& g : grids) list.push_back(to_json(g));
        if (!en_.out.empty()) {
          write_file(en_.out, list.dump() + "\n");
          emit(json() ? Json{{"count", grids.size()}, {"out", en_.out}}.dump() : std::to_string(grids.size()));
        } else if (json()) {
          emit(list.dump());
        } else {
          for (std::size_t k = 0; k < grids.size(); ++k) {
            if (k) emit("");
            emit_grid(grids[k]);
          }
        }
        return 0;
      };
    });
  }

  void add_skepext(CLI::App& app) {
    auto* sub = app.add_subcommand("skepext", "Count minus halves extending a plus half");
    sub->add_option("--gplus", se_.gplus, "Plus half, JSON file")->required();
    sub->add_option("--lam", se_.lam)->required();
    sub->callback([this] {
      action_ = [this] {
        PlusGrid gp = load_gplus(se_.gplus);
        IntVec lam = vec(se_.lam);
        std::uint64_t c = skep_ext(gp, lam);
        emit(json() ? Json{{"lam", to_json(lam)}, {"count", c}}.dump() : std::to_string(c));
        return 0;
      };
    });
  }

  void add_oct(CLI::App& app) {
    auto* sub = app.add_subcommand("oct", "Octahedron recurrence bijections");
    sub->add_option("op", oct_.op)->required()->check(CLI::IsMember({"hive2skep", "skep2hive", "flip"}));
    sub->add_option("--in", oct_.in, "Input grid, JSON file")->required();
    sub->add_option("--out", oct_.out, "Output grid, JSON file");
    sub->add_option("--kind", oct_.kind, "Input kind for flip")->check(CLI::IsMember({"hive", "skep"}));
    sub->callback([this] {
      action_ = [this] {
        TriGrid g = load_grid(oct_.in);
        TriGrid r;
        if (oct_.op == "hive2skep") {
          r = hive_to_skep(g);
        } else if (oct_.op == "skep2hive") {
          r = skep_to_hive(g);
        } else {
          if (oct_.kind.empty()) throw UsageError("flip needs --kind hive|skep");
          r = oct_.kind == "hive" ? hive_flip(g) : skep_flip(g);
        }
        if (!oct_.out.empty())
          write_file(oct_.out, to_json(r).dump() + "\n");
        else
          emit_grid(r);
        return 0;
      };
    });
  }

  void add_pi(CLI::App& app) {
    auto* sub = app.add_subcommand("pi", "Parallelepiped decomposition of Pi(x,y)");
    sub->add_option("--x", pi_.x)->required();
    sub->add_option("--y", pi_.y)->required();
    sub->add_flag("--enumerate", pi_.enumerate, "One representative per line");
    sub->callback([this] {
      action_ = [this] {
        IntVec x = vec(pi_.x), y = vec(pi_.y);
        if (pi_.enumerate) {
          for (const IntVec& z : pi_enumerate(x, y)) emit(json() ? to_json(z).dump() : to_string(z));
          return 0;
        }
        Parallelepiped p = pi_decompose(x, y);
        if (json()) {
          Json dirs = Json::array();
          for (const auto& d : p.directions) {
            Json one = Json::array();
            for (std::size_t k : d) one.push_back(k + 1);
            dirs.push_back(one);
          }
          emit(Json{{"base", to_json(p.base)}, {"directions", dirs}, {"distances", p.distances}, {"shift", p.shift},
                    {"size", p.size()}}
                   .dump());
        } else {
          emit("base " + to_string(p.base) + " shift " + std::to_string(p.shift) + " size " + std::to_string(p.size()));
          for (std::size_t k = 0; k < p.directions.size(); ++k) {
            std::string s = "{";
            for (std::size_t q = 0; q < p.directions[k].size(); ++q) s += (q ? "," : "") + std::to_string(p.directions[k][q] + 1);
            emit(s + "} x " + std::to_string(p.distances[k]));
          }
        }
        return 0;
      };
    });
  }

  void add_covers(CLI::App& app) {
    auto* sub = app.add_subcommand("covers", "Candidate covers below (lam, mu)");
    sub->add_option("--lam", cov_.lam)->required();
    sub->add_option("--mu", cov_.mu)->required();
    sub->callback([this] {
      action_ = [this] {
        for (const auto& [a, b] : covers(vec(cov_.lam), vec(cov_.mu)))
          emit(json() ? Json{{"lam", to_json(a)}, {"mu", to_json(b)}}.dump() : to_string(a) + " " + to_string(b));
        return 0;
      };
    });
  }

  void add_verify(CLI::App& app) {
    auto* v = app.add_subcommand("verify", "Verification campaigns");
    v->require_subcommand(1);

    auto* lpp = v->add_subcommand("lpp", "Compare c(lam,mu;nu) with c(lam2,mu2;nu) for all nu");
    lpp->add_option("--lam", ver_.lam)->required();
    lpp->add_option("--mu", ver_.mu)->required();
    lpp->add_option("--lam2", ver_.lam2)->required();
    lpp->add_option("--mu2", ver_.mu2)->required();
    lpp->callback([this] {
      action_ = [this] { return emit_reports({verify_lpp(vec(ver_.lam), vec(ver_.mu), vec(ver_.lam2), vec(ver_.mu2))}); };
    });

    auto* sweep = v->add_subcommand("sweep-lpp", "verify lpp over a box of partition pairs");
    add_bounds(sweep);
    sweep->callback([this] {
      action_ = [this] { return emit_reports({sweep_lpp(ver_.n, ver_.max_entry, cfg_.jobs)}); };
    });

    auto* better = v->add_subcommand("better-lpp", "SkepExt(g+, lam) <= SkepExt(g+, lam2)");
    better->add_option("--gplus", ver_.gplus)->required();
    better->add_option("--lam", ver_.lam)->required();
    better->add_option("--lam2", ver_.lam2)->required();
    better->callback([this] {
      action_ = [this] { return emit_reports({verify_better_lpp(load_gplus(ver_.gplus), vec(ver_.lam), vec(ver_.lam2))}); };
    });

    auto* comm = v->add_subcommand("commutative", "SkepExt(g+, lam) = SkepExt(g+, mu); sweeps without --gplus");
    comm->add_option("--gplus", ver_.gplus);
    comm->add_option("--lo", ver_.lo_vec, "Window corner");
    comm->add_option("--hi", ver_.hi_vec, "Window corner");
    add_bounds(comm);
    comm->callback([this] {
      action_ = [this] {
        if (ver_.gplus.empty()) return emit_reports({sweep_skep_theorems(ver_.n, ver_.max_entry, cfg_.jobs)});
        PlusGrid gp = load_gplus(ver_.gplus);
        if (ver_.lo_vec.empty() != ver_.hi_vec.empty()) throw UsageError("give both --lo and --hi or neither");
        Box w = ver_.lo_vec.empty() ? default_commutative_window(gp) : Box{vec(ver_.lo_vec), vec(ver_.hi_vec)};
        return emit_reports({verify_skep_commutative(gp, w)});
      };
    });

    auto* llc = v->add_subcommand("skepext-llc", "L-log-concavity of lam -> SkepExt(g+, lam)");
    llc->add_option("--gplus", ver_.gplus);
    llc->add_option("--sample", ver_.sample, "Check this many plus halves drawn from the sweep");
    llc->add_option("--lo", ver_.lo, "Window is [lo, hi]^n");
    llc->add_option("--hi", ver_.hi, "Window is [lo, hi]^n");
    add_bounds(llc);
    llc->callback([this] {
      action_ = [this] {
        if (ver_.gplus.empty() == (ver_.sample == 0)) throw UsageError("give exactly one of --gplus and --sample");
        std::vector<PlusGrid> gps =
            ver_.gplus.empty() ? sample_gplus(ver_.n, ver_.max_entry, ver_.sample, cfg_.seed) : std::vector{load_gplus(ver_.gplus)};
        std::vector<VerifyReport> reports;
        for (const PlusGrid& gp : gps) reports.push_back(verify_skepext_llc(gp, Box::cube(gp.n(), ver_.lo, ver_.hi)));
        return emit_reports(reports);
      };
    });

    auto* cov = v->add_subcommand("covers", "Every pair below (lam, mu) is below a listed cover");
    cov->add_option("--lam", ver_.lam)->required();
    cov->add_option("--mu", ver_.mu)->required();
    cov->add_option("--bound", ver_.bound, "Largest spread of mu - lam to brute force");
    cov->callback([this] {
      action_ = [this] { return emit_reports({verify_covers(vec(ver_.lam), vec(ver_.mu), ver_.bound)}); };
    });

    auto* counts = v->add_subcommand("counts", "Hive, skep, sum and tableau counts agree");
    add_bounds(counts);
    counts->callback([this] {
      action_ = [this] { return emit_reports({cross_check_counts(ver_.n, ver_.max_entry, cfg_.jobs)}); };
    });

    auto* probe = v->add_subcommand("probe-question", "Evidence on lam -> c(lam, pi - lam; nu) (experimental)");
    probe->add_option("--pi", ver_.pi)->required();
    probe->add_option("--nu", ver_.nu)->required();
    probe->add_option("--lo", ver_.lo);
    probe_hi_ = probe->add_option("--hi", ver_.probe_hi, "Defaults to max(pi)");
    probe->callback([this] {
      action_ = [this] {
        IntVec pi = vec(ver_.pi);
        Int hi = probe_hi_->count() ? ver_.probe_hi : (pi.empty() ? 0 : pi.max());
        return emit_reports({probe_question(pi, vec(ver_.nu), Box::cube(pi.size(), ver_.lo, hi))});
      };
    });
  }

  void add_bounds(CLI::App* sub) {
    sub->add_option("--n", ver_.n, "Number of parts")->check(CLI::PositiveNumber);
    sub->add_option("--max-entry", ver_.max_entry, "Largest part")->check(CLI::NonNegativeNumber);
  }

  std::ostream& out_;
  std::ostream& err_;
  Config cfg_;
  CLI::Option* probe_hi_ = nullptr;
  std::function<int()> action_ = [] { return 0; };

  struct {
    std::string lam, mu, nu, model = "skep";
  } lr_;
  struct {
    std::string kind, lam, mu, nu, out;
  } en_;
  struct {
    std::string gplus, lam;
  } se_;
  struct {
    std::string op, in, out, kind;
  } oct_;
  struct {
    std::string x, y;
    bool enumerate = false;
  } pi_;
  struct {
    std::string lam, mu;
  } cov_;
  struct {
    std::string lam, mu, lam2, mu2, gplus, pi, nu, lo_vec, hi_vec;
    std::size_t n = 3;
    Int max_entry = 3;
    std::size_t sample = 0;
    Int lo = 0;
    Int hi = 4;
    Int probe_hi = 0;
    Int bound = 8;
  } ver_;
};

}  // namespace

int write_reports(const std::vector<VerifyReport>& reports, bool json, std::ostream& out) {
  bool failed = false;
  for (const VerifyReport& r : reports) {
    out << (json ? to_json_line(r) : to_table_line(r)) << "\n";
    failed = failed || r.failed();
  }
  return failed ? 1 : 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace lrskep::cli
