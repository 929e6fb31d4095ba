// nilorb: nilpotent orbits of the exceptional Lie algebras.
//
//   nilorb classify E6
//   nilorb analyze E7 --orbit 0,0,0,1,0,1,0 --format json
//   nilorb verify all
//   nilorb table E6 --kind quotient --format csv

#include "nilorb/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace nilorb;

namespace {

constexpr int kUsage = 1;
constexpr int kMismatch = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  std::string orbit;
  std::uint64_t seed = 1;
  std::string format = "text";
  int trials = 25;
  std::string kind = "quotient";
};

TypeRank parse_type(const std::string& s) {
  try {
    return TypeRank::parse(s);
  } catch (const TypeError& e) {
    throw UsageError(e.what());
  }
}

const RefData& refdata() {
  static const RefData ref = RefData::load(default_refdata_dir());
  return ref;
}

const OrbitRecord* ref_record(const TypeRank& t, const WeightedDynkinDiagram& d) {
  for (const TypeRank& known : RefData::types()) {
    if (known == t) {
      for (const OrbitRecord& r : refdata().orbits(t)) {
        if (r.diagram == d) return &r;
      }
    }
  }
  return nullptr;
}

bool has_refdata(const TypeRank& t) {
  for (const TypeRank& known : RefData::types()) {
    if (known == t) return true;
  }
  return false;
}

WeightedDynkinDiagram resolve_orbit(const TypeRank& t, const std::string& text) {
  if (text.find_first_not_of("0123456789, ") == std::string::npos) {
    try {
      return WeightedDynkinDiagram::parse(text);
    } catch (const OrbitError& e) {
      throw UsageError(e.what());
    }
  }
  if (!has_refdata(t)) throw UsageError("labels are only known for G2, F4, E6, E7, E8");
  const OrbitRecord* r = refdata().find_label(t, text);
  if (r == nullptr) throw UsageError("unknown " + t.name() + " orbit label: " + text);
  return r->diagram;
}

int classify(const Options& o, Format f) {
  const LieAlgebra L(parse_type(o.type));
  const auto orbits = enumerate_orbits(L, o.seed, o.trials);
  Table t;
  t.title = "Nilpotent orbits in " + L.type_rank().name();
  t.columns = {"label", "diagram", "orbit_dim"};
  Json rows = Json::array();
  for (const NilpotentOrbit& orb : orbits) {
    const OrbitRecord* r = ref_record(L.type_rank(), orb.diagram);
    const Grading g = grading_from_diagram(L, orb.diagram);
    const auto dim = L.dim() - g.dim(0) - g.dim(1);
    t.rows.push_back({r ? r->label : "", orb.diagram.to_string(), std::to_string(dim)});
    rows.push_back({{"diagram", orb.diagram.to_string()}, {"label", r ? Json(r->label) : Json(nullptr)}, {"orbit_dim", dim},
                    {"e", sparse_json(L, orb.triple.e)}});
  }
  if (f == Format::Json) {
    std::cout << dump({{"schema_version", kSchemaVersion}, {"type", L.type_rank().name()}, {"seed", o.seed},
                       {"trials", o.trials}, {"orbits", rows}});
  } else {
    std::cout << render(t, f);
  }
  return 0;
}

int analyze_one(const Options& o, Format f) {
  if (o.orbit.empty()) throw UsageError("analyze needs --orbit");
  const LieAlgebra L(parse_type(o.type));
  const WeightedDynkinDiagram d = resolve_orbit(L.type_rank(), o.orbit);
  if (d.rank() != L.rank()) throw UsageError(L.type_rank().name() + " diagrams have " + std::to_string(L.rank()) + " labels");
  if (d.is_zero() || !dynkin_test(L, d, o.trials, o.seed)) {
    throw UsageError(d.to_string() + " is not the diagram of a nonzero nilpotent orbit in " + L.type_rank().name());
  }
  const NilpotentOrbit orb{d, complete_triple(L, characteristic(L, d), find_representative(L, d, o.seed)), std::nullopt};
  const OrbitAnalysis a = analyze(L, orb);
  const OrbitRecord* r = ref_record(L.type_rank(), d);
  if (f == Format::Json) {
    Json j = orbit_json(L, a, r);
    j["type"] = L.type_rank().name();
    j["schema_version"] = kSchemaVersion;
    std::cout << dump(j);
    return 0;
  }
  Table t;
  t.title = L.type_rank().name() + " orbit " + d.to_string() + (r ? " (" + r->label + ")" : "");
  t.columns = {"field", "value"};
  t.rows = {{"orbit_dim", std::to_string(a.orbit_dim)},
            {"dim_ge", std::to_string(a.dim_ge)},
            {"dim_derived", std::to_string(a.dim_derived)},
            {"reachable", a.reachable ? "true" : "false"},
            {"strongly_reachable", a.strongly_reachable ? "true" : "false"},
            {"positive_part_generated", a.positive_part_generated ? "true" : "false"},
            {"dim_ce", std::to_string(a.dim_ce)},
            {"weights", join_weights(a.ce_weights)}};
  std::cout << render(t, f);
  return 0;
}

int verify(const Options& o, Format f) {
  std::vector<TypeRank> types;
  if (o.type == "all") {
    types = RefData::types();
  } else {
    types.push_back(parse_type(o.type));
    if (!has_refdata(types.back())) throw UsageError("no reference data for " + types.back().name());
  }
  Json out = {{"schema_version", kSchemaVersion}, {"seed", o.seed}, {"trials", o.trials}, {"types", Json::array()}};
  std::size_t total = 0;
  for (const TypeRank& tr : types) {
    const LieAlgebra L(tr);
    const auto analyses = analyze_all(L, o.seed, o.trials);
    const auto diffs = compare(L, analyses, refdata());
    total += diffs.size();
    Json orbits = Json::array(), dj = Json::array();
    for (const OrbitAnalysis& a : analyses) orbits.push_back(orbit_json(L, a, ref_record(tr, a.orbit.diagram)));
    for (const Discrepancy& d : diffs) dj.push_back(discrepancy_json(d));
    out["types"].push_back({{"type", tr.name()}, {"checked", analyses.size()}, {"orbits", orbits}, {"discrepancies", dj}});
    if (f != Format::Json) {
      std::cout << tr.name() << ": " << analyses.size() << " orbits checked, " << diffs.size() << " discrepancies\n";
      for (const Discrepancy& d : diffs) {
        std::cout << "  " << d.diagram << " " << d.field << ": expected " << d.expected << ", got " << d.actual << "\n";
      }
    }
  }
  if (f == Format::Json) std::cout << dump(out);
  return total == 0 ? 0 : kMismatch;
}

int table(const Options& o, Format f) {
  const LieAlgebra L(parse_type(o.type));
  if (!has_refdata(L.type_rank())) throw UsageError("no reference data for " + L.type_rank().name());
  TableKind kind;
  try {
    kind = parse_table_kind(o.kind);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << render(build_table(L, analyze_all(L, o.seed, o.trials), refdata(), kind), f);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent orbits of the exceptional Lie algebras: classification, reachability, g_e/[g_e,g_e]"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool type_all) {
    sub->add_option("type", o.type, type_all ? "G2, F4, E6, E7, E8 or all" : "Lie type, e.g. E7")->required();
    sub->add_option("--seed", o.seed, "seed for random choices")->capture_default_str();
    sub->add_option("--trials", o.trials, "random trials per diagram")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "text, csv or json")->capture_default_str()->check(CLI::IsMember({"text", "csv", "json"}));
  };
  CLI::App* c = app.add_subcommand("classify", "list all nonzero nilpotent orbits");
  common(c, false);
  CLI::App* a = app.add_subcommand("analyze", "analyze one orbit");
  common(a, false);
  a->add_option("--orbit", o.orbit, "diagram (comma-separated, Bourbaki order) or label")->required();
  CLI::App* v = app.add_subcommand("verify", "recompute everything and compare with the reference tables");
  common(v, true);
  CLI::App* t = app.add_subcommand("table", "render a table from live computation");
  common(t, false);
  t->add_option("--kind", o.kind, "quotient, reachable or exceptions")->capture_default_str()->check(CLI::IsMember({"quotient", "reachable", "exceptions"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    const Format f = parse_format(o.format);
    if (c->parsed()) return classify(o, f);
    if (a->parsed()) return analyze_one(o, f);
    if (v->parsed()) return verify(o, f);
    return table(o, f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
