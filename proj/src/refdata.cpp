#include "nilorb/refdata.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

namespace nilorb {

namespace {

using nlohmann::json;

json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw RefDataError("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw RefDataError(p.string() + ": " + e.what());
  }
}

WeightedDynkinDiagram diagram_of(const json& j, const TypeRank& t) {
  WeightedDynkinDiagram d(j.get<std::vector<int>>());
  if (d.rank() != t.rank) throw RefDataError("diagram of wrong length in " + t.name());
  return d;
}

const std::map<std::string, std::pair<std::size_t, std::size_t>>& expected_counts() {
  // total orbits, reachable orbits
  static const std::map<std::string, std::pair<std::size_t, std::size_t>> c = {
      {"G2", {4, 1}}, {"F4", {15, 4}}, {"E6", {20, 6}}, {"E7", {44, 8}}, {"E8", {69, 16}}};
  return c;
}

void validate(const std::string& name, const std::vector<OrbitRecord>& recs) {
  const auto [total, reach] = expected_counts().at(name);
  if (recs.size() != total) throw RefDataError(name + ": expected " + std::to_string(total) + " orbits");
  std::set<WeightedDynkinDiagram> seen;
  std::size_t nreach = 0;
  for (const OrbitRecord& r : recs) {
    if (!seen.insert(r.diagram).second) throw RefDataError(name + ": duplicate diagram " + r.diagram.to_string());
    if (static_cast<int>(r.ce_weights.size()) != r.dim_ce) throw RefDataError(name + " " + r.label + ": weight count != dim_ce");
    if (r.strongly_reachable && !r.reachable) throw RefDataError(name + " " + r.label + ": strong but not reachable");
    if (r.strongly_reachable != (r.dim_ce == 0)) throw RefDataError(name + " " + r.label + ": strong != (dim_ce == 0)");
    nreach += r.reachable ? 1 : 0;
  }
  if (nreach != reach) throw RefDataError(name + ": expected " + std::to_string(reach) + " reachable orbits");
}

} // namespace

std::vector<TypeRank> RefData::types() {
  return {TypeRank::parse("G2"), TypeRank::parse("F4"), TypeRank::parse("E6"), TypeRank::parse("E7"),
          TypeRank::parse("E8")};
}

RefData RefData::load(const std::filesystem::path& dir) {
  RefData out;
  try {
    for (const TypeRank& t : types()) {
      const json doc = read_json(dir / (t.name() + ".json"));
      if (doc.at("type").get<std::string>() != t.name()) throw RefDataError(t.name() + ".json: type field mismatch");
      std::vector<OrbitRecord> recs;
      for (const json& o : doc.at("orbits")) {
        OrbitRecord r;
        r.type = t;
        r.label = o.at("label").get<std::string>();
        r.aliases = o.at("aliases").get<std::vector<std::string>>();
        r.diagram = diagram_of(o.at("diagram"), t);
        r.reachable = o.at("reachable").get<bool>();
        r.strongly_reachable = o.at("strongly_reachable").get<bool>();
        r.rigid = o.at("rigid").get<bool>();
        r.rigid_source = o.at("rigid_source").get<std::string>();
        r.dim_ce = o.at("dim_ce").get<int>();
        r.ce_weights = o.at("ce_weights").get<std::vector<int>>();
        std::sort(r.ce_weights.begin(), r.ce_weights.end());
        if (o.contains("bullet_pair")) {
          const auto p = o.at("bullet_pair").get<std::vector<int>>();
          if (p.size() != 2) throw RefDataError(t.name() + " " + r.label + ": bullet_pair needs two entries");
          r.bullet_pair = std::make_pair(p[0], p[1]);
        }
        recs.push_back(std::move(r));
      }
      validate(t.name(), recs);
      out.orbits_.emplace(t.name(), std::move(recs));
    }
    const json ex = read_json(dir / "exceptions.json");
    for (const json& e : ex.at("exceptions")) {
      ExceptionRecord r;
      r.type = TypeRank::parse(e.at("type").get<std::string>());
      r.label = e.at("label").get<std::string>();
      r.diagram = diagram_of(e.at("diagram"), r.type);
      r.sheet_rank = e.at("sheet_rank").get<int>();
      r.dim_ce = e.at("dim_ce").get<int>();
      out.exceptions_.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw RefDataError(std::string("malformed refdata: ") + e.what());
  } catch (const OrbitError& e) {
    throw RefDataError(std::string("malformed refdata: ") + e.what());
  }
  if (out.exceptions_.size() != 6) throw RefDataError("exceptions.json: expected 6 records");
  return out;
}

const std::vector<OrbitRecord>& RefData::orbits(const TypeRank& t) const {
  const auto it = orbits_.find(t.name());
  if (it == orbits_.end()) throw RefDataError("no reference table for " + t.name());
  return it->second;
}

const OrbitRecord& RefData::lookup(const TypeRank& t, const WeightedDynkinDiagram& d) const {
  for (const OrbitRecord& r : orbits(t)) {
    if (r.diagram == d) return r;
  }
  throw RefDataError("no " + t.name() + " orbit with diagram " + d.to_string());
}

const OrbitRecord* RefData::find_label(const TypeRank& t, const std::string& label) const {
  for (const OrbitRecord& r : orbits(t)) {
    if (r.label == label) return &r;
  }
  for (const OrbitRecord& r : orbits(t)) {
    if (std::find(r.aliases.begin(), r.aliases.end(), label) != r.aliases.end()) return &r;
  }
  return nullptr;
}

std::filesystem::path default_refdata_dir() {
  if (const char* env = std::getenv("NILORB_REFDATA"); env != nullptr && *env != '\0') return env;
  return NILORB_REFDATA_DIR;
}

} // namespace nilorb
