#pragma once

// Nilpotent orbits via weighted Dynkin diagrams: gradings, the Dynkin
// criterion, representatives and sl2-triples.

#include "nilorb/liealg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

class OrbitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Labels alpha_i(h) in Bourbaki node order, each in {0,1,2}.
struct WeightedDynkinDiagram {
  std::vector<int> labels;

  WeightedDynkinDiagram() = default;
  explicit WeightedDynkinDiagram(std::vector<int> l);

  /// "0,0,0,1,0,1,0"; whitespace tolerated.
  static WeightedDynkinDiagram parse(std::string_view text);
  std::string to_string() const;
  bool is_zero() const;
  int rank() const { return static_cast<int>(labels.size()); }

  friend auto operator<=>(const WeightedDynkinDiagram&, const WeightedDynkinDiagram&) = default;
};

struct Sl2Triple {
  Element e, h, f;
};

/// Eigenspace decomposition of L under ad h, in basis indices: every
/// Chevalley basis vector is an ad h eigenvector.
class Grading {
public:
  Grading(std::vector<int> weights);

  int weight(int basis_index) const { return weight_[static_cast<std::size_t>(basis_index)]; }
  /// Position of a basis vector inside its own piece.
  int position(int basis_index) const { return position_[static_cast<std::size_t>(basis_index)]; }
  const std::vector<int>& indices(int k) const;
  Index dim(int k) const { return static_cast<Index>(indices(k).size()); }
  std::vector<int> degrees() const;
  Subspace piece(int k) const;
  std::map<int, Subspace> pieces() const;

private:
  std::vector<int> weight_;
  std::vector<int> position_;
  std::map<int, std::vector<int>> indices_;
};

struct NilpotentOrbit {
  WeightedDynkinDiagram diagram;
  Sl2Triple triple;
  std::optional<std::string> label;
};

/// The Cartan element h with alpha_i(h) = labels[i].
Element characteristic(const LieAlgebra& L, const WeightedDynkinDiagram& d);

/// Throws LieError unless h is in the Cartan subalgebra with integral action.
Grading grading_from_h(const LieAlgebra& L, const Element& h);
Grading grading_from_diagram(const LieAlgebra& L, const WeightedDynkinDiagram& d);

/// Dynkin's criterion: some e in g(2) has [g(0), e] = g(2), and such an e
/// satisfies h in [e, g(-2)] for the characteristic h of d. Tests `trials`
/// random elements with coefficients in {1..10^4}; ranks are computed mod a
/// 61-bit prime. Surjectivity mod p implies it over Q; the second condition is
/// re-verified exactly whenever a triple is built.
bool dynkin_test(const LieAlgebra& L, const WeightedDynkinDiagram& d, int trials, std::uint64_t seed);

/// e in g(2) in the dense G(0)-orbit, preferring sums of at most five root
/// vectors of g(2) with coefficient 1, then seeded random small-integer
/// combinations. Throws OrbitError if the search budget runs out.
Element find_representative(const LieAlgebra& L, const WeightedDynkinDiagram& d, std::uint64_t seed);

/// Solves [e, f] = h for f in g(-2); all sl2 relations are verified exactly.
Sl2Triple complete_triple(const LieAlgebra& L, const Element& h, const Element& e);

/// All nonzero orbits, sorted by (orbit dimension, labels).
std::vector<NilpotentOrbit> enumerate_orbits(const LieAlgebra& L, std::uint64_t seed, int trials = 25);

/// g_e split along the grading of h; requires [h, e] = 2e.
struct GradedCentralizer {
  std::map<int, Subspace> pieces; // nonzero pieces only
  Index dim() const;
  Subspace total(Index ambient_dim) const;
};
GradedCentralizer graded_centralizer(const LieAlgebra& L, const Grading& g, const Element& e);

int orbit_dimension(const LieAlgebra& L, const NilpotentOrbit& o);

/// ad e restricted to g(from) -> g(from + 2), over S; e must lie in g(2).
template <class S>
Matrix<S> ad_block(const LieAlgebra& L, const Grading& g, const SparseVec<S>& e, int from) {
  const std::vector<int>& src = g.indices(from);
  Matrix<S> m = Matrix<S>::Zero(g.dim(from + 2), static_cast<Index>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c) {
    for (const auto& [i, ei] : e) {
      for (const Term& t : L.product(i, src[c])) m(g.position(t.index), static_cast<Index>(c)) += ei * S(t.coeff);
    }
  }
  return m;
}

} // namespace nilorb
