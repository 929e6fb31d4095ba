#pragma once

// Rendering of analyses as text, CSV or JSON, and the field-level comparison
// of computed results against the reference tables.

#include "nilorb/reach.hpp"
#include "nilorb/refdata.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nilorb {

enum class Format { Text, Csv, Json };
Format parse_format(const std::string& s);

/// Keys are sorted (nlohmann::json uses std::map) and every number is an
/// integer; rationals are written as strings.
using Json = nlohmann::json;

/// Output schema version, bumped on incompatible changes.
inline constexpr int kSchemaVersion = 1;

Json sparse_json(const LieAlgebra& L, const Element& v);
Json orbit_json(const LieAlgebra& L, const OrbitAnalysis& a, const OrbitRecord* ref);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

struct Discrepancy {
  std::string type;
  std::string diagram;
  std::string field;
  std::string expected;
  std::string actual;
};

/// Every check of computed analyses against the reference data for one type:
/// diagram sets, reachable and strong flags, dim c_e and weights, the
/// (dim g_e, dim [g_e, g_e]) pairs of rigid non-strongly-reachable orbits,
/// reachable <=> g(>=1)_e generated by g(1)_e, strongly reachable <=>
/// (reachable and rigid), and the exceptions table.
std::vector<Discrepancy> compare(const LieAlgebra& L, const std::vector<OrbitAnalysis>& analyses,
                                 const RefData& ref);

Json discrepancy_json(const Discrepancy& d);

/// A rectangular table of strings.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

enum class TableKind { Quotient, Reachable, Exceptions };
TableKind parse_table_kind(const std::string& s);

/// Tables rebuilt from live analyses; labels attached from refdata.
Table build_table(const LieAlgebra& L, const std::vector<OrbitAnalysis>& analyses, const RefData& ref,
                  TableKind kind);

std::string render(const Table& t, Format f);

/// "2,4,6" (empty for no weights).
std::string join_weights(const std::vector<int>& w);

} // namespace nilorb
