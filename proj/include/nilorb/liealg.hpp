#pragma once

// The split simple Lie algebra over Q in a Chevalley basis, and the subspace
// calculus built on it: centralizers, derived subalgebras, generated
// subalgebras, graded quotients.

#include "nilorb/exactla.hpp"
#include "nilorb/rootsys.hpp"

#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nilorb {

class LieError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficient vector over the Chevalley basis.
using Element = RatVector;

template <class S>
using SparseVec = std::vector<std::pair<int, S>>;

struct Term {
  int index;
  int coeff;
};

/// Basis order: x_a for the positive roots (index = root index), then
/// y_a = x_{-a} (index = root index of -a), then h_1..h_l.
/// Immutable after construction.
class LieAlgebra {
public:
  explicit LieAlgebra(TypeRank t);

  const RootSystem& root_system() const { return rs_; }
  const TypeRank& type_rank() const { return rs_.type_rank(); }
  int dim() const { return dim_; }
  int rank() const { return rs_.rank(); }
  int num_positive() const { return rs_.num_positive(); }

  int cartan_index(int i) const { return 2 * num_positive() + i; }
  bool is_cartan(int basis_index) const { return basis_index >= 2 * num_positive(); }

  /// [b_i, b_j] as a short list of integer terms.
  const std::vector<Term>& product(int i, int j) const {
    return table_[static_cast<std::size_t>(i * dim_ + j)];
  }

  /// "x3", "y12", "h1".
  std::string basis_label(int basis_index) const;

  Element zero() const { return Element::Zero(dim_); }
  Element basis_element(int i) const;

private:
  RootSystem rs_;
  int dim_;
  std::vector<std::vector<Term>> table_;
};

template <class S>
SparseVec<S> sparse_of(const Vector<S>& v) {
  SparseVec<S> out;
  for (Index i = 0; i < v.size(); ++i) {
    if (!is_zero(v(i))) out.emplace_back(static_cast<int>(i), v(i));
  }
  return out;
}

/// out += [a, b].
template <class S>
void add_bracket(const LieAlgebra& L, const SparseVec<S>& a, const SparseVec<S>& b, Vector<S>& out) {
  for (const auto& [i, ai] : a) {
    for (const auto& [j, bj] : b) {
      const auto& terms = L.product(i, j);
      if (terms.empty()) continue;
      const S c = ai * bj;
      for (const Term& t : terms) out(t.index) += c * S(t.coeff);
    }
  }
}

template <class S>
Vector<S> bracket_sparse(const LieAlgebra& L, const SparseVec<S>& a, const SparseVec<S>& b) {
  Vector<S> out = Vector<S>::Zero(L.dim());
  add_bracket(L, a, b, out);
  return out;
}

Element bracket(const LieAlgebra& L, const Element& a, const Element& b);

/// Column j is [a, b_j].
RatMatrix ad_matrix(const LieAlgebra& L, const Element& a);

/// A subspace of L in canonical form (rref rows).
class Subspace {
public:
  Subspace() = default;
  /// Span of the given rows.
  static Subspace span(const RatMatrix& rows);
  /// Wraps rows already in rref; not re-checked.
  static Subspace from_echelon(Echelon<Rational> e, Index ambient_dim);
  static Subspace zero(Index ambient_dim);
  static Subspace whole(Index ambient_dim);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  Element vector(Index r) const { return basis_.row(r).transpose(); }

  bool contains(const Element& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  Index ambient_ = 0;
  RatMatrix basis_;
  std::vector<Index> pivots_;
};

/// Sum of subspaces whose bases have pairwise disjoint supports (e.g. pieces
/// of a grading); stays canonical without further elimination.
Subspace direct_sum_disjoint(const std::vector<Subspace>& parts, Index ambient_dim);

Subspace centralizer(const LieAlgebra& L, const Element& a);

/// Every pairwise bracket of basis vectors lies in s.
bool is_subalgebra(const LieAlgebra& L, const Subspace& s);

/// [s, s]; throws LieError if s is not a subalgebra.
Subspace derived_subalgebra(const LieAlgebra& L, const Subspace& s);

/// Smallest subalgebra containing gens. If `within` is given, gens must lie in
/// it and it must be a subalgebra; the result then lies in `within`.
Subspace subalgebra_closure(const LieAlgebra& L, const std::vector<Element>& gens,
                            const Subspace* within = nullptr);

/// ad h eigenvalue of every basis vector. h must lie in the Cartan subalgebra
/// with integral values on the roots (throws LieError otherwise).
std::vector<int> basis_weights(const LieAlgebra& L, const Element& h);

struct QuotientWeights {
  Index dim = 0;
  std::vector<int> weights; // ascending, with multiplicity
};

/// Dimension of s/t and the ad h eigenvalues on it, computed gradewise as
/// dim(s ∩ g(k)) - dim(t ∩ g(k)).
QuotientWeights quotient_with_action(const LieAlgebra& L, const Subspace& s, const Subspace& t,
                                     const Element& h);

/// A stream of vectors in L, available both exactly and reduced mod p.
struct VectorStream {
  Index count = 0;
  std::function<Element(Index)> exact;
  std::function<ModVector(Index)> modular; // optional; derived from `exact` if empty
};

/// Exact span of a stream of vectors known to lie in `ceiling`. A mod-p pass
/// picks independent candidates and stops as soon as their number reaches
/// dim(ceiling), which certifies span = ceiling. Otherwise the candidates are
/// lifted to Q and every remaining vector is checked exactly.
Subspace bounded_span(const VectorStream& stream, const Subspace& ceiling);

} // namespace nilorb
