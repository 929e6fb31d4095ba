#pragma once

// Reachability, strong reachability and the abelian quotient
// c_e = g_e / [g_e, g_e] of nilpotent centralizers.

#include "nilorb/orbits.hpp"

#include <functional>
#include <map>
#include <vector>

namespace nilorb {

struct OrbitAnalysis {
  NilpotentOrbit orbit;
  int orbit_dim = 0;
  Index dim_ge = 0;
  Index dim_derived = 0;        // dim [g_e, g_e]
  bool reachable = false;       // e in [g_e, g_e]
  bool strongly_reachable = false; // g_e = [g_e, g_e]
  bool positive_part_generated = false; // g(>=1)_e generated by g(1)_e
  Index dim_ce = 0;
  std::vector<int> ce_weights;  // ad h eigenvalues on c_e, ascending

  // Graded pieces, keyed by ad h degree (nonzero pieces only).
  std::map<int, Subspace> ge_pieces;
  std::map<int, Subspace> derived_pieces;
};

/// Full analysis of one orbit; every reported dimension is exact.
OrbitAnalysis analyze(const LieAlgebra& L, const NilpotentOrbit& o);

/// analyze() over enumerate_orbits(), in the same order.
std::vector<OrbitAnalysis> analyze_all(const LieAlgebra& L, std::uint64_t seed, int trials = 25);

struct ReachableRow {
  WeightedDynkinDiagram diagram;
  bool strongly_reachable = false;
};

/// The reachable orbits, in enumeration order.
std::vector<ReachableRow> reachable_table(const std::vector<OrbitAnalysis>& analyses);

struct RigidDiscrepancy {
  WeightedDynkinDiagram diagram;
  Index dim_ge = 0;
  Index dim_derived = 0;
  bool e_spans_quotient = false; // g_e = [g_e, g_e] + Q e
};

/// Rigid, non-reachable orbits. `is_rigid` must answer for every diagram and
/// may throw for unknown ones.
std::vector<RigidDiscrepancy> rigid_discrepancy_report(
    const std::vector<OrbitAnalysis>& analyses,
    const std::function<bool(const WeightedDynkinDiagram&)>& is_rigid);

/// [g_e(0), g_e(1)] == g_e(1).
bool degree_one_is_perfect(const LieAlgebra& L, const OrbitAnalysis& a);

} // namespace nilorb
