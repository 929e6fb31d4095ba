#include "nilorb/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace nilorb {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("unknown format: " + s);
}

TableKind parse_table_kind(const std::string& s) {
  if (s == "quotient") return TableKind::Quotient;
  if (s == "reachable") return TableKind::Reachable;
  if (s == "exceptions") return TableKind::Exceptions;
  throw std::invalid_argument("unknown table kind: " + s);
}

std::string join_weights(const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

Json sparse_json(const LieAlgebra& L, const Element& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    out.push_back({{"basis", L.basis_label(static_cast<int>(i))}, {"coeff", to_string(v(i))}});
  }
  return out;
}

Json orbit_json(const LieAlgebra& L, const OrbitAnalysis& a, const OrbitRecord* ref) {
  Json graded = Json::object();
  for (const auto& [k, s] : a.ge_pieces) {
    const auto d = a.derived_pieces.find(k);
    graded[std::to_string(k)] = {{"dim_ge", s.dim()}, {"dim_derived", d == a.derived_pieces.end() ? 0 : d->second.dim()}};
  }
  Json j = {
      {"diagram", a.orbit.diagram.to_string()},
      {"label", ref != nullptr ? Json(ref->label) : Json(nullptr)},
      {"orbit_dim", a.orbit_dim},
      {"dim_ge", a.dim_ge},
      {"dim_derived", a.dim_derived},
      {"reachable", a.reachable},
      {"strongly_reachable", a.strongly_reachable},
      {"positive_part_generated", a.positive_part_generated},
      {"dim_ce", a.dim_ce},
      {"ce_weights", a.ce_weights},
      {"graded", graded},
      {"triple", {{"e", sparse_json(L, a.orbit.triple.e)}, {"h", sparse_json(L, a.orbit.triple.h)}, {"f", sparse_json(L, a.orbit.triple.f)}}},
  };
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json discrepancy_json(const Discrepancy& d) {
  return {{"type", d.type}, {"diagram", d.diagram}, {"field", d.field}, {"expected", d.expected}, {"actual", d.actual}};
}

namespace {

std::string str(bool b) { return b ? "true" : "false"; }

} // namespace

std::vector<Discrepancy> compare(const LieAlgebra& L, const std::vector<OrbitAnalysis>& analyses,
                                 const RefData& ref) {
  const TypeRank& t = L.type_rank();
  const std::string tn = t.name();
  std::vector<Discrepancy> out;
  auto report = [&](const std::string& diagram, const std::string& field, std::string expected, std::string actual) {
    out.push_back({tn, diagram, field, std::move(expected), std::move(actual)});
  };

  std::map<WeightedDynkinDiagram, const OrbitAnalysis*> computed;
  for (const OrbitAnalysis& a : analyses) computed.emplace(a.orbit.diagram, &a);
  for (const OrbitRecord& r : ref.orbits(t)) {
    if (!computed.count(r.diagram)) report(r.diagram.to_string(), "present", "true", "false");
  }

  for (const OrbitAnalysis& a : analyses) {
    const std::string d = a.orbit.diagram.to_string();
    const OrbitRecord* r = nullptr;
    for (const OrbitRecord& rec : ref.orbits(t)) {
      if (rec.diagram == a.orbit.diagram) r = &rec;
    }
    if (r == nullptr) {
      report(d, "present", "false", "true");
      continue;
    }
    if (a.reachable != r->reachable) report(d, "reachable", str(r->reachable), str(a.reachable));
    if (a.strongly_reachable != r->strongly_reachable) {
      report(d, "strongly_reachable", str(r->strongly_reachable), str(a.strongly_reachable));
    }
    if (a.dim_ce != r->dim_ce) report(d, "dim_ce", std::to_string(r->dim_ce), std::to_string(a.dim_ce));
    if (a.ce_weights != r->ce_weights) report(d, "ce_weights", join_weights(r->ce_weights), join_weights(a.ce_weights));
    if (r->bullet_pair) {
      const auto [ge, der] = *r->bullet_pair;
      if (a.dim_ge != ge || a.dim_derived != der) {
        report(d, "bullet_pair", std::to_string(ge) + "," + std::to_string(der),
               std::to_string(a.dim_ge) + "," + std::to_string(a.dim_derived));
      }
    }
    if (r->rigid && !a.reachable && a.dim_ge - a.dim_derived != 1) {
      report(d, "rigid_codim", "1", std::to_string(a.dim_ge - a.dim_derived));
    }
    if (a.reachable != a.positive_part_generated) {
      report(d, "positive_part_generated", str(a.reachable), str(a.positive_part_generated));
    }
    if (a.strongly_reachable != (a.reachable && r->rigid)) {
      report(d, "strong_iff_reachable_and_rigid", str(a.reachable && r->rigid), str(a.strongly_reachable));
    }
  }
  // rigid, not strongly reachable <=> carries a bullet pair
  for (const OrbitRecord& r : ref.orbits(t)) {
    if ((r.rigid && !r.strongly_reachable) != r.bullet_pair.has_value()) {
      report(r.diagram.to_string(), "bullet_list_membership", str(r.bullet_pair.has_value()), str(r.rigid && !r.strongly_reachable));
    }
  }

  for (const ExceptionRecord& ex : ref.exceptions()) {
    if (ex.type != t) continue;
    const auto it = computed.find(ex.diagram);
    const std::string d = ex.diagram.to_string();
    if (it == computed.end()) {
      report(d, "exception_present", "true", "false");
      continue;
    }
    if (it->second->dim_ce != ex.dim_ce) report(d, "exception_dim_ce", std::to_string(ex.dim_ce), std::to_string(it->second->dim_ce));
    if (ex.sheet_rank == it->second->dim_ce) {
      report(d, "exception_rank_differs", "rank != " + std::to_string(ex.sheet_rank), std::to_string(it->second->dim_ce));
    }
  }
  return out;
}

Table build_table(const LieAlgebra& L, const std::vector<OrbitAnalysis>& analyses, const RefData& ref,
                  TableKind kind) {
  const TypeRank& t = L.type_rank();
  auto label_of = [&](const WeightedDynkinDiagram& d) -> std::string {
    for (const OrbitRecord& r : ref.orbits(t)) {
      if (r.diagram == d) return r.label;
    }
    return "";
  };
  Table out;
  switch (kind) {
  case TableKind::Quotient:
    out.title = "Nilpotent orbits in " + t.name();
    out.columns = {"label", "diagram", "dim_ce", "weights"};
    for (const OrbitAnalysis& a : analyses) {
      out.rows.push_back({label_of(a.orbit.diagram), a.orbit.diagram.to_string(), std::to_string(a.dim_ce), join_weights(a.ce_weights)});
    }
    break;
  case TableKind::Reachable:
    out.title = "Reachable nilpotent orbits in " + t.name();
    out.columns = {"label", "diagram", "strong", "rigid"};
    for (const ReachableRow& row : reachable_table(analyses)) {
      const OrbitRecord& r = ref.lookup(t, row.diagram);
      out.rows.push_back({r.label, row.diagram.to_string(), row.strongly_reachable ? "x" : "", r.rigid ? "x" : ""});
    }
    break;
  case TableKind::Exceptions:
    out.title = "Sheet rank differs from dim c_e in " + t.name();
    out.columns = {"label", "diagram", "rank", "dim_ce"};
    for (const ExceptionRecord& ex : ref.exceptions()) {
      if (ex.type != t) continue;
      const auto it = std::find_if(analyses.begin(), analyses.end(), [&](const OrbitAnalysis& a) { return a.orbit.diagram == ex.diagram; });
      out.rows.push_back({ex.label, ex.diagram.to_string(), std::to_string(ex.sheet_rank),
                          it == analyses.end() ? "" : std::to_string(it->dim_ce)});
    }
    break;
  }
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

} // namespace

std::string render(const Table& t, Format f) {
  std::ostringstream os;
  switch (f) {
  case Format::Csv:
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_field(t.columns[c]);
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
      os << '\n';
    }
    break;
  case Format::Json: {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json r = Json::object();
      for (std::size_t c = 0; c < row.size(); ++c) r[t.columns[c]] = row[c];
      rows.push_back(r);
    }
    os << dump({{"title", t.title}, {"columns", t.columns}, {"rows", rows}, {"schema_version", kSchemaVersion}});
    break;
  }
  case Format::Text: {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        s += cells[c];
        if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
      }
      os << s << '\n';
    };
    os << t.title << '\n';
    line(t.columns);
    for (const auto& row : t.rows) line(row);
    break;
  }
  }
  return os.str();
}

} // namespace nilorb
