#include "nilorb/reach.hpp"

namespace nilorb {

namespace {

struct Basis {
  std::vector<SparseVec<Rational>> exact;
  std::optional<std::vector<SparseVec<ModP>>> modular;
};

Basis basis_of(const Subspace& s) {
  Basis b;
  std::vector<SparseVec<ModP>> mod;
  bool ok = true;
  for (Index r = 0; r < s.dim(); ++r) {
    b.exact.push_back(sparse_of<Rational>(s.vector(r)));
    SparseVec<ModP> v;
    for (const auto& [i, c] : b.exact.back()) {
      const auto m = ModP::from_rational(c);
      if (!m) {
        ok = false;
        break;
      }
      v.emplace_back(i, *m);
    }
    mod.push_back(std::move(v));
  }
  if (ok) b.modular = std::move(mod);
  return b;
}

// Span of [a, b] over the given basis pairs, bounded by `ceiling`.
Subspace bracket_span(const LieAlgebra& L, const std::vector<std::pair<const Basis*, const Basis*>>& blocks,
                      const Subspace& ceiling) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto [a, b] = blocks[k];
    for (std::size_t i = 0; i < a->exact.size(); ++i) {
      for (std::size_t j = (a == b ? i + 1 : 0); j < b->exact.size(); ++j) pairs.emplace_back(k, i, j);
    }
  }
  bool modular = true;
  for (const auto& [a, b] : blocks) modular = modular && a->modular && b->modular;
  VectorStream stream;
  stream.count = static_cast<Index>(pairs.size());
  stream.exact = [&](Index n) {
    const auto [k, i, j] = pairs[static_cast<std::size_t>(n)];
    return bracket_sparse(L, blocks[k].first->exact[i], blocks[k].second->exact[j]);
  };
  if (modular) {
    stream.modular = [&](Index n) {
      const auto [k, i, j] = pairs[static_cast<std::size_t>(n)];
      return bracket_sparse(L, (*blocks[k].first->modular)[i], (*blocks[k].second->modular)[j]);
    };
  }
  return bounded_span(stream, ceiling);
}

} // namespace

OrbitAnalysis analyze(const LieAlgebra& L, const NilpotentOrbit& o) {
  OrbitAnalysis a;
  a.orbit = o;
  const Element& e = o.triple.e;
  const Grading g = grading_from_h(L, o.triple.h);
  a.ge_pieces = graded_centralizer(L, g, e).pieces;
  for (const auto& [k, s] : a.ge_pieces) {
    if (k < 0) throw OrbitError("analyze: centralizer has a piece of negative degree");
    a.dim_ge += s.dim();
  }
  a.orbit_dim = L.dim() - static_cast<int>(a.dim_ge);

  std::map<int, Basis> bases;
  for (const auto& [k, s] : a.ge_pieces) bases.emplace(k, basis_of(s));

  // [g_e, g_e] in degree m is spanned by [g_e(j), g_e(m - j)].
  for (const auto& [m, piece] : a.ge_pieces) {
    std::vector<std::pair<const Basis*, const Basis*>> blocks;
    for (const auto& [j, bj] : bases) {
      if (2 * j > m) break;
      const auto other = bases.find(m - j);
      if (other != bases.end()) blocks.emplace_back(&bj, &other->second);
    }
    const Subspace d = bracket_span(L, blocks, piece);
    if (d.dim() > 0) a.derived_pieces.emplace(m, d);
    a.dim_derived += d.dim();
    for (Index i = d.dim(); i < piece.dim(); ++i) a.ce_weights.push_back(m);
  }
  a.dim_ce = a.dim_ge - a.dim_derived;
  a.strongly_reachable = a.dim_ce == 0;
  const auto d2 = a.derived_pieces.find(2);
  a.reachable = d2 != a.derived_pieces.end() && d2->second.contains(e);

  // The subalgebra generated by g_e(1) has degree-m part [g_e(1), C(m-1)].
  a.positive_part_generated = true;
  const auto one = bases.find(1);
  std::map<int, Subspace> closure;
  if (one != bases.end()) closure.emplace(1, a.ge_pieces.at(1));
  for (const auto& [m, piece] : a.ge_pieces) {
    if (m < 2) continue;
    const auto prev = closure.find(m - 1);
    if (prev == closure.end()) {
      a.positive_part_generated = false;
      continue;
    }
    const Basis pb = basis_of(prev->second);
    Subspace cur = bracket_span(L, {{&one->second, &pb}}, piece);
    if (cur.dim() < piece.dim()) a.positive_part_generated = false;
    if (cur.dim() > 0) closure.emplace(m, std::move(cur));
  }
  return a;
}

std::vector<OrbitAnalysis> analyze_all(const LieAlgebra& L, std::uint64_t seed, int trials) {
  std::vector<OrbitAnalysis> out;
  for (const NilpotentOrbit& o : enumerate_orbits(L, seed, trials)) out.push_back(analyze(L, o));
  return out;
}

std::vector<ReachableRow> reachable_table(const std::vector<OrbitAnalysis>& analyses) {
  std::vector<ReachableRow> rows;
  for (const OrbitAnalysis& a : analyses) {
    if (a.reachable) rows.push_back({a.orbit.diagram, a.strongly_reachable});
  }
  return rows;
}

std::vector<RigidDiscrepancy> rigid_discrepancy_report(
    const std::vector<OrbitAnalysis>& analyses,
    const std::function<bool(const WeightedDynkinDiagram&)>& is_rigid) {
  std::vector<RigidDiscrepancy> out;
  for (const OrbitAnalysis& a : analyses) {
    if (a.reachable || !is_rigid(a.orbit.diagram)) continue;
    // e lies in g_e(2) but not in [g_e, g_e](2)
    out.push_back({a.orbit.diagram, a.dim_ge, a.dim_derived, a.dim_ge - a.dim_derived == 1});
  }
  return out;
}

bool degree_one_is_perfect(const LieAlgebra& L, const OrbitAnalysis& a) {
  const auto one = a.ge_pieces.find(1);
  if (one == a.ge_pieces.end()) return true;
  const auto zero = a.ge_pieces.find(0);
  if (zero == a.ge_pieces.end()) return false;
  const Basis b0 = basis_of(zero->second), b1 = basis_of(one->second);
  return bracket_span(L, {{&b0, &b1}}, one->second).dim() == one->second.dim();
}

} // namespace nilorb
