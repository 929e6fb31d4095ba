// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance <path to nilorb executable> <refdata dir>

#include "nilorb/report.hpp"
#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace nilorb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct TypeData {
  TypeRank type;
  std::unique_ptr<LieAlgebra> L;
  std::vector<OrbitAnalysis> analyses;
  double enumerate_seconds = 0;
  double analyze_seconds = 0;
};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!pass) detail << "; ";
    pass = false;
    detail << why;
  }
};

const OrbitAnalysis* find(const TypeData& t, const std::vector<int>& labels) {
  for (const OrbitAnalysis& a : t.analyses) {
    if (a.orbit.diagram.labels == labels) return &a;
  }
  return nullptr;
}

std::set<std::vector<int>> diagram_set(const std::vector<OrbitRecord>& recs, bool reachable_only) {
  std::set<std::vector<int>> s;
  for (const OrbitRecord& r : recs) {
    if (!reachable_only || r.reachable) s.insert(r.diagram.labels);
  }
  return s;
}

Outcome classification(const std::vector<TypeData>& data, const RefData& ref) {
  Outcome o;
  const std::map<std::string, std::size_t> counts = {{"G2", 4}, {"F4", 15}, {"E6", 20}, {"E7", 44}, {"E8", 69}};
  double small = 0;
  for (const TypeData& t : data) {
    const std::string n = t.type.name();
    std::set<std::vector<int>> got;
    for (const OrbitAnalysis& a : t.analyses) got.insert(a.orbit.diagram.labels);
    if (t.analyses.size() != counts.at(n)) o.fail(n + ": " + std::to_string(t.analyses.size()) + " orbits");
    if (got != diagram_set(ref.orbits(t.type), false)) o.fail(n + ": diagram set differs");
    if (n == "E7" && t.enumerate_seconds > 180) o.fail("E7 took " + std::to_string(t.enumerate_seconds) + "s");
    if (n == "E8" && t.enumerate_seconds > 900) o.fail("E8 took " + std::to_string(t.enumerate_seconds) + "s");
    if (n == "G2" || n == "F4" || n == "E6") small += t.enumerate_seconds;
  }
  if (small > 60) o.fail("G2+F4+E6 took " + std::to_string(small) + "s");
  if (o.pass) {
    o.detail << "4/15/20/44/69 orbits; enumeration " << std::fixed;
    o.detail.precision(2);
    for (const TypeData& t : data) o.detail << t.type.name() << " " << t.enumerate_seconds << "s ";
  }
  return o;
}

Outcome reachable_tables(const std::vector<TypeData>& data, const RefData& ref) {
  Outcome o;
  const std::map<std::string, std::size_t> counts = {{"G2", 1}, {"F4", 4}, {"E6", 6}, {"E7", 8}, {"E8", 16}};
  for (const TypeData& t : data) {
    const std::string n = t.type.name();
    const auto rows = reachable_table(t.analyses);
    std::set<std::vector<int>> got;
    for (const ReachableRow& r : rows) {
      got.insert(r.diagram.labels);
      if (r.strongly_reachable != ref.lookup(t.type, r.diagram).strongly_reachable) o.fail(n + " " + r.diagram.to_string() + ": Strong column");
    }
    for (const OrbitAnalysis& a : t.analyses) {
      if (a.strongly_reachable != (a.dim_ce == 0)) o.fail(n + " " + a.orbit.diagram.to_string() + ": strong != (dim_ce == 0)");
    }
    if (rows.size() != counts.at(n)) o.fail(n + ": " + std::to_string(rows.size()) + " reachable");
    if (got != diagram_set(ref.orbits(t.type), true)) o.fail(n + ": reachable set differs");
  }
  if (o.pass) o.detail << "6/8/16/4/1 reachable orbits for E6/E7/E8/F4/G2, Strong column equal";
  return o;
}

Outcome quotient_tables(const std::vector<TypeData>& data, const RefData& ref) {
  Outcome o;
  std::size_t checked = 0;
  for (const TypeData& t : data) {
    for (const OrbitAnalysis& a : t.analyses) {
      const OrbitRecord& r = ref.lookup(t.type, a.orbit.diagram);
      ++checked;
      if (a.dim_ce != r.dim_ce || a.ce_weights != r.ce_weights) {
        o.fail(t.type.name() + " " + r.label + ": got " + std::to_string(a.dim_ce) + " {" + join_weights(a.ce_weights) + "}");
      }
    }
  }
  auto spot = [&](const std::string& type, std::vector<int> labels, std::vector<int> weights) {
    for (const TypeData& t : data) {
      if (t.type.name() != type) continue;
      const OrbitAnalysis* a = find(t, labels);
      if (a == nullptr || a->ce_weights != weights) o.fail(type + " spot check " + WeightedDynkinDiagram(labels).to_string());
    }
  };
  spot("E8", std::vector<int>(8, 2), {2, 14, 22, 26, 34, 38, 46, 58});
  spot("E6", {0, 0, 0, 2, 0, 0}, {0, 0, 2, 2, 2});
  spot("F4", {0, 2, 0, 0}, {2, 2, 2, 2, 2, 2});
  if (checked != 152) o.fail("checked " + std::to_string(checked) + " orbits");
  if (o.pass) o.detail << "dim c_e and weights equal for all " << checked << " orbits";
  return o;
}

Outcome worked_example(const std::vector<TypeData>& data) {
  Outcome o;
  const TypeData& t = data[3];
  const OrbitAnalysis* a = find(t, {0, 0, 0, 1, 0, 1, 0});
  if (a == nullptr) {
    o.fail("E7 0,0,0,1,0,1,0 missing");
    return o;
  }
  const LieAlgebra& L = *t.L;
  // ungraded recomputation
  const Subspace ge = centralizer(L, a->orbit.triple.e);
  const Subspace der = derived_subalgebra(L, ge);
  const Subspace g2 = grading_from_h(L, a->orbit.triple.h).piece(2);
  const RatMatrix cap = intersect(der.basis(), g2.basis());
  if (ge.dim() != 35 || a->dim_ge != 35) o.fail("dim g_e = " + std::to_string(ge.dim()));
  if (der.dim() != 33 || a->dim_derived != 33) o.fail("dim [g_e,g_e] = " + std::to_string(der.dim()));
  if (der.contains(a->orbit.triple.e) || a->reachable) o.fail("e lies in [g_e,g_e]");
  if (cap.rows() != 7 || a->derived_pieces.at(2).dim() != 7) o.fail("dim [g_e,g_e] cap g(2) = " + std::to_string(cap.rows()));
  if (o.pass) o.detail << "E7 A3+A2: dim g_e 35, dim [g_e,g_e] 33, e not in it, dim [g_e,g_e] cap g(2) = 7";
  return o;
}

Outcome bullet_pairs(const std::vector<TypeData>& data, const RefData& ref) {
  Outcome o;
  const std::map<std::string, std::multiset<std::pair<Index, Index>>> expected = {
      {"G2", {{6, 5}}}, {"F4", {{16, 15}}}, {"E6", {}}, {"E7", {{41, 40}}}, {"E8", {{84, 83}, {46, 45}, {46, 45}}}};
  for (const TypeData& t : data) {
    const auto report = rigid_discrepancy_report(
        t.analyses, [&](const WeightedDynkinDiagram& d) { return ref.lookup(t.type, d).rigid; });
    std::multiset<std::pair<Index, Index>> got;
    for (const RigidDiscrepancy& r : report) {
      got.emplace(r.dim_ge, r.dim_derived);
      if (!r.e_spans_quotient) o.fail(t.type.name() + " " + r.diagram.to_string() + ": e does not span the quotient");
      const OrbitAnalysis* a = find(t, r.diagram.labels);
      if (a->strongly_reachable || a->reachable || a->dim_ge - a->dim_derived != 1) o.fail(t.type.name() + " " + r.diagram.to_string() + ": codim");
    }
    if (got != expected.at(t.type.name())) o.fail(t.type.name() + ": pairs differ");
  }
  if (o.pass) o.detail << "E7 (41,40); E8 (84,83),(46,45),(46,45); F4 (16,15); G2 (6,5); E6 none; codim 1, e spans c_e";
  return o;
}

Outcome panyushev(const std::vector<TypeData>& data) {
  Outcome o;
  std::size_t n = 0;
  for (const TypeData& t : data) {
    for (const OrbitAnalysis& a : t.analyses) {
      ++n;
      if (a.reachable != a.positive_part_generated) o.fail(t.type.name() + " " + a.orbit.diagram.to_string());
    }
  }
  if (o.pass) o.detail << "reachable <=> g(>=1)_e generated by g(1)_e for all " << n << " orbits";
  return o;
}

Outcome strong_iff_rigid(const std::vector<TypeData>& data, const RefData& ref) {
  Outcome o;
  for (const TypeData& t : data) {
    for (const OrbitAnalysis& a : t.analyses) {
      const bool rigid = ref.lookup(t.type, a.orbit.diagram).rigid;
      if (a.strongly_reachable != (a.reachable && rigid)) o.fail(t.type.name() + " " + a.orbit.diagram.to_string());
    }
  }
  if (o.pass) o.detail << "strongly reachable <=> reachable and rigid, zero exceptions";
  return o;
}

Outcome properties(const std::vector<TypeData>& data) {
  Outcome o;
  // Jacobi
  for (const char* n : {"G2", "F4"}) {
    const LieAlgebra L(TypeRank::parse(n));
    if (oracle::jacobi_failures_exhaustive(L) != 0) o.fail(std::string("Jacobi ") + n);
  }
  const int kRandomTriples = 100000;
  for (const TypeData& t : data) {
    if (t.type.letter != 'E') continue;
    std::mt19937_64 gen(t.type.rank);
    std::uniform_int_distribution<int> pick(0, t.L->dim() - 1);
    long failures = 0;
    for (int i = 0; i < kRandomTriples; ++i) failures += oracle::jacobi_holds(*t.L, pick(gen), pick(gen), pick(gen)) ? 0 : 1;
    if (failures) o.fail("Jacobi " + t.type.name() + ": " + std::to_string(failures));
  }
  // rank-nullity
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> dim(1, 10), entry(-4, 4);
  for (int i = 0; i < 1000; ++i) {
    RatMatrix m(dim(gen), dim(gen));
    for (Index r = 0; r < m.rows(); ++r) {
      for (Index c = 0; c < m.cols(); ++c) m(r, c) = entry(gen) * (entry(gen) > 0 ? 1 : 0);
    }
    const RatMatrix k = kernel(m);
    if (rank(m) + k.rows() != m.cols() || !RatMatrix(m * k.transpose()).isZero()) o.fail("rank-nullity");
  }
  // gradings, centralizer dimensions, triples
  for (const TypeData& t : data) {
    const LieAlgebra& L = *t.L;
    for (const OrbitAnalysis& a : t.analyses) {
      const Sl2Triple& tr = a.orbit.triple;
      const Grading g = grading_from_h(L, tr.h);
      for (int k : g.degrees()) {
        if (g.dim(k) != g.dim(-k)) o.fail("grading symmetry " + a.orbit.diagram.to_string());
      }
      if (a.dim_ge != g.dim(0) + g.dim(1)) o.fail("dim g_e " + a.orbit.diagram.to_string());
      if (bracket(L, tr.h, tr.e) != Element(2 * tr.e) || bracket(L, tr.h, tr.f) != Element(-2 * tr.f) ||
          bracket(L, tr.e, tr.f) != tr.h) {
        o.fail("sl2 relations " + a.orbit.diagram.to_string());
      }
    }
  }
  // type A oracle
  for (int n : {3, 4}) {
    const LieAlgebra L(TypeRank{'A', n - 1});
    std::map<std::vector<int>, int> got;
    for (const NilpotentOrbit& orb : enumerate_orbits(L, 1)) got.emplace(orb.diagram.labels, orbit_dimension(L, orb));
    if (got != oracle::type_a_orbits(n)) o.fail("type A" + std::to_string(n - 1) + " partitions");
  }
  if (o.pass) {
    o.detail << "Jacobi exhaustive G2/F4 and " << kRandomTriples
             << " random triples each for E6/E7/E8; rank-nullity x1000; gradings, dim g_e, sl2 relations for 152 orbits; A2, A3 partitions";
  }
  return o;
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 65536> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Outcome determinism(const std::string& exe) {
  Outcome o;
  const std::string cmd = "'" + exe + "' verify all --format json --seed 1";
  const RunResult a = run(cmd), b = run(cmd);
  if (a.status != 0 || b.status != 0) o.fail("verify exit status " + std::to_string(a.status) + "/" + std::to_string(b.status));
  if (a.out.empty() || a.out != b.out) o.fail("outputs differ");
  if (o.pass) o.detail << "two verify runs, " << a.out.size() << " identical bytes";
  return o;
}

Outcome exceptions(const std::vector<TypeData>& data, const RefData& ref) {
  Outcome o;
  for (const ExceptionRecord& ex : ref.exceptions()) {
    const OrbitAnalysis* a = nullptr;
    for (const TypeData& t : data) {
      if (t.type == ex.type) a = find(t, ex.diagram.labels);
    }
    if (a == nullptr) {
      o.fail(ex.type.name() + " " + ex.label + " missing");
      continue;
    }
    if (a->dim_ce != ex.dim_ce) o.fail(ex.type.name() + " " + ex.label + ": dim c_e " + std::to_string(a->dim_ce));
    if (ex.sheet_rank == ex.dim_ce) o.fail(ex.type.name() + " " + ex.label + ": rank equals dim c_e");
  }
  if (o.pass) o.detail << "live dim c_e equals the table for all six rows, each differing from the sheet rank";
  return o;
}

} // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <nilorb executable> <refdata dir>\n";
    return 2;
  }
  const RefData ref = RefData::load(argv[2]);

  std::vector<TypeData> data;
  for (const TypeRank& t : RefData::types()) {
    TypeData d;
    d.type = t;
    auto t0 = Clock::now();
    d.L = std::make_unique<LieAlgebra>(t);
    const auto orbits = enumerate_orbits(*d.L, 1);
    d.enumerate_seconds = seconds_since(t0);
    t0 = Clock::now();
    for (const NilpotentOrbit& o : orbits) d.analyses.push_back(analyze(*d.L, o));
    d.analyze_seconds = seconds_since(t0);
    data.push_back(std::move(d));
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 classification", [&] { return classification(data, ref); }},
      {"2 reachable tables", [&] { return reachable_tables(data, ref); }},
      {"3 c_e tables", [&] { return quotient_tables(data, ref); }},
      {"4 worked example", [&] { return worked_example(data); }},
      {"5 rigid non-strongly-reachable pairs", [&] { return bullet_pairs(data, ref); }},
      {"6 Panyushev equivalence", [&] { return panyushev(data); }},
      {"7 strong <=> reachable and rigid", [&] { return strong_iff_rigid(data, ref); }},
      {"8 property suites", [&] { return properties(data); }},
      {"9 determinism", [&] { return determinism(argv[1]); }},
      {"10 exceptions table consistency", [&] { return exceptions(data, ref); }},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << name << ": " << o.detail.str() << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
