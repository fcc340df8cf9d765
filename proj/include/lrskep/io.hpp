#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lrskep/core.hpp"
#include "lrskep/grid.hpp"
#include "lrskep/lconvex.hpp"
#include "lrskep/octahedron.hpp"
#include "lrskep/oracle.hpp"

// Serialization. Every dump is compact JSON with sorted keys; the text forms
// end without a newline. Parsing failures throw ParseError.
namespace lrskep {

using Json = nlohmann::json;

Json to_json(const IntVec& v);
IntVec intvec_from_json(const Json& j);

// {"n": n, "rows": [[g_00, ..., g_n0], ..., [g_0n]]}
Json to_json(const TriGrid& g);
TriGrid trigrid_from_json(const Json& j);

// {"n": n, "points": [{"i": i, "j": j, "v": v}, ...]} in raster order.
Json to_json(const PlusGrid& g);
Json to_json(const MinusGrid& g);
PlusGrid plusgrid_from_json(const Json& j);
MinusGrid minusgrid_from_json(const Json& j);

// {"n": n, "bounds": [{"i": i, "j": j, "c": c or "inf"}, ...]}; omitted
// pairs are unbounded.
Json to_json(const DiffConstraints& dc);
DiffConstraints diffconstraints_from_json(const Json& j);

// {"n": n, "values": [{"i": i, "j": j, "t": t, "v": v}, ...]}
Json to_json(const TetraFunc& h);
TetraFunc tetrafunc_from_json(const Json& j);

// {"terms": [{"partition": [...], "coeff": c}, ...]}
Json to_json(const SchurExpansion& e);
SchurExpansion schur_from_json(const Json& j);

Json parse_json(std::string_view text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

std::string grid_to_json(const TriGrid& g);
TriGrid grid_from_json(std::string_view text);

}  // namespace lrskep
