#include "lrskep/io.hpp"

#include <fstream>
#include <sstream>

namespace lrskep {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

int side_of(const Json& j) {
  int n = j.at("n").get<int>();
  if (n < 0) throw ParseError("negative side length");
  return n;
}

template <class G>
Json half_to_json(const G& g) {
  Json pts = Json::array();
  for (const Point& p : g.points()) pts.push_back({{"i", p.i}, {"j", p.j}, {"v", g(p)}});
  return {{"n", g.n()}, {"points", pts}};
}

template <class G>
G half_from_json(const Json& j, const char* what) {
  return guarded(what, [&] {
    G g(side_of(j));
    std::size_t seen = 0;
    for (const Json& p : j.at("points")) {
      int i = p.at("i").get<int>(), jj = p.at("j").get<int>();
      if (!g.contains(i, jj)) throw ParseError("point outside the parity class");
      g.set(i, jj, p.at("v").get<Int>());
      ++seen;
    }
    if (seen != g.points().size()) throw ParseError("wrong number of points");
    return g;
  });
}

}  // namespace

Json to_json(const IntVec& v) { return Json(v.data()); }

IntVec intvec_from_json(const Json& j) {
  return guarded("integer vector", [&] { return IntVec(j.get<std::vector<Int>>()); });
}

Json to_json(const TriGrid& g) { return {{"n", g.n()}, {"rows", g.rows()}}; }

TriGrid trigrid_from_json(const Json& j) {
  return guarded("grid", [&] {
    int n = side_of(j);
    auto rows = j.at("rows").get<std::vector<std::vector<Int>>>();
    if (rows.size() != static_cast<std::size_t>(n + 1)) throw ParseError("wrong number of rows");
    return TriGrid::from_rows(rows);
  });
}

Json to_json(const PlusGrid& g) { return half_to_json(g); }
Json to_json(const MinusGrid& g) { return half_to_json(g); }
PlusGrid plusgrid_from_json(const Json& j) { return half_from_json<PlusGrid>(j, "plus grid"); }
MinusGrid minusgrid_from_json(const Json& j) { return half_from_json<MinusGrid>(j, "minus grid"); }

Json to_json(const DiffConstraints& dc) {
  Json b = Json::array();
  for (std::size_t i = 0; i < dc.n(); ++i) {
    for (std::size_t j = 0; j < dc.n(); ++j) {
      if (i == j) continue;
      auto c = dc.get(i, j);
      if (c) b.push_back({{"i", i}, {"j", j}, {"c", *c}});
    }
  }
  return {{"n", dc.n()}, {"bounds", b}};
}

DiffConstraints diffconstraints_from_json(const Json& j) {
  return guarded("constraints", [&] {
    DiffConstraints dc(static_cast<std::size_t>(side_of(j)));
    for (const Json& b : j.at("bounds")) {
      const Json& c = b.at("c");
      std::optional<Int> v;
      if (c.is_string()) {
        if (c.get<std::string>() != "inf") throw ParseError("bound must be an integer or \"inf\"");
      } else {
        v = c.get<Int>();
      }
      dc.set(b.at("i").get<std::size_t>(), b.at("j").get<std::size_t>(), v);
    }
    return dc;
  });
}

Json to_json(const TetraFunc& h) {
  Json vals = Json::array();
  for (const TetraPoint& p : tetra_points(h.n()))
    vals.push_back({{"i", p.i}, {"j", p.j}, {"t", p.t}, {"v", h(p)}});
  return {{"n", h.n()}, {"values", vals}};
}

TetraFunc tetrafunc_from_json(const Json& j) {
  return guarded("tetrahedral function", [&] {
    TetraFunc h(side_of(j));
    std::size_t seen = 0;
    for (const Json& p : j.at("values")) {
      int i = p.at("i").get<int>(), jj = p.at("j").get<int>(), t = p.at("t").get<int>();
      if (!h.contains(i, jj, t)) throw ParseError("point outside the tetrahedron");
      h.set(i, jj, t, p.at("v").get<Int>());
      ++seen;
    }
    if (seen != tetra_points(h.n()).size()) throw ParseError("wrong number of values");
    return h;
  });
}

Json to_json(const SchurExpansion& e) {
  Json terms = Json::array();
  for (const auto& [lam, c] : e.terms()) terms.push_back({{"partition", lam.data()}, {"coeff", c}});
  return {{"terms", terms}};
}

SchurExpansion schur_from_json(const Json& j) {
  return guarded("Schur expansion", [&] {
    SchurExpansion e;
    for (const Json& t : j.at("terms"))
      e.add_term(IntVec(t.at("partition").get<std::vector<Int>>()), t.at("coeff").get<Int>());
    return e;
  });
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string grid_to_json(const TriGrid& g) { return to_json(g).dump(); }
TriGrid grid_from_json(std::string_view text) { return trigrid_from_json(parse_json(text)); }

}  // namespace lrskep
