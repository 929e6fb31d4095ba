#include "nilorb/liealg.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace nilorb {

LieAlgebra::LieAlgebra(TypeRank t) : rs_(t), dim_(2 * rs_.num_positive() + rs_.rank()) {
  const int nroots = rs_.num_roots();
  table_.assign(static_cast<std::size_t>(dim_ * dim_), {});
  auto slot = [&](int i, int j) -> std::vector<Term>& {
    return table_[static_cast<std::size_t>(i * dim_ + j)];
  };
  for (int a = 0; a < nroots; ++a) {
    const Eigen::VectorXi weights = rs_.pairings(rs_.root(a).coeffs);
    for (int b = 0; b < nroots; ++b) {
      const int s = rs_.sum_index(a, b);
      if (s >= 0) {
        slot(a, b).push_back({s, rs_.structure_constant(a, b)});
      } else if (s == -2) {
        // [x_a, x_{-a}] = h_a
        const Eigen::VectorXi co = rs_.coroot(a);
        for (int i = 0; i < rank(); ++i) {
          if (co(i) != 0) slot(a, b).push_back({cartan_index(i), co(i)});
        }
      }
    }
    for (int i = 0; i < rank(); ++i) {
      if (weights(i) == 0) continue;
      slot(cartan_index(i), a).push_back({a, weights(i)});
      slot(a, cartan_index(i)).push_back({a, -weights(i)});
    }
  }
}

std::string LieAlgebra::basis_label(int basis_index) const {
  const int np = num_positive();
  if (basis_index < np) return "x" + std::to_string(basis_index + 1);
  if (basis_index < 2 * np) return "y" + std::to_string(basis_index - np + 1);
  return "h" + std::to_string(basis_index - 2 * np + 1);
}

Element LieAlgebra::basis_element(int i) const {
  Element e = zero();
  e(i) = 1;
  return e;
}

Element bracket(const LieAlgebra& L, const Element& a, const Element& b) {
  if (a.size() != L.dim() || b.size() != L.dim()) throw ShapeError("bracket: element of wrong length");
  return bracket_sparse(L, sparse_of(a), sparse_of(b));
}

RatMatrix ad_matrix(const LieAlgebra& L, const Element& a) {
  if (a.size() != L.dim()) throw ShapeError("ad_matrix: element of wrong length");
  const SparseVec<Rational> sa = sparse_of(a);
  RatMatrix m = RatMatrix::Zero(L.dim(), L.dim());
  for (int j = 0; j < L.dim(); ++j) {
    for (const auto& [i, ai] : sa) {
      for (const Term& t : L.product(i, j)) m(t.index, j) += ai * t.coeff;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(const RatMatrix& rows) { return from_echelon(rref(rows), rows.cols()); }

Subspace Subspace::from_echelon(Echelon<Rational> e, Index ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = std::move(e.rows);
  if (s.basis_.rows() == 0) s.basis_.resize(0, ambient_dim);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::zero(Index ambient_dim) { return from_echelon({RatMatrix(0, ambient_dim), {}}, ambient_dim); }

Subspace Subspace::whole(Index ambient_dim) {
  Echelon<Rational> e{RatMatrix::Identity(ambient_dim, ambient_dim), {}};
  for (Index i = 0; i < ambient_dim; ++i) e.pivots.push_back(i);
  return from_echelon(std::move(e), ambient_dim);
}

bool Subspace::contains(const Element& v) const {
  if (v.size() != ambient_) throw ShapeError("Subspace::contains: length mismatch");
  Element w = v;
  for (Index r = 0; r < dim(); ++r) {
    const Index p = pivots_[static_cast<std::size_t>(r)];
    if (is_zero(w(p))) continue;
    const Rational f = w(p);
    for (Index j = 0; j < ambient_; ++j) {
      if (!is_zero(basis_(r, j))) w(j) -= f * basis_(r, j);
    }
  }
  for (Index j = 0; j < ambient_; ++j) {
    if (!is_zero(w(j))) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (Index r = 0; r < other.dim(); ++r) {
    if (!contains(other.vector(r))) return false;
  }
  return true;
}

Subspace direct_sum_disjoint(const std::vector<Subspace>& parts, Index ambient_dim) {
  std::vector<std::pair<Index, Element>> rows;
  for (const Subspace& s : parts) {
    for (Index r = 0; r < s.dim(); ++r) rows.emplace_back(s.pivots()[static_cast<std::size_t>(r)], s.vector(r));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Echelon<Rational> e{RatMatrix(static_cast<Index>(rows.size()), ambient_dim), {}};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    e.rows.row(static_cast<Index>(r)) = rows[r].second.transpose();
    e.pivots.push_back(rows[r].first);
  }
  return Subspace::from_echelon(std::move(e), ambient_dim);
}

// ---------------------------------------------------------------------------

Subspace centralizer(const LieAlgebra& L, const Element& a) {
  return Subspace::span(kernel<Rational>(ad_matrix(L, a)));
}

namespace {

std::vector<SparseVec<Rational>> sparse_basis(const Subspace& s) {
  std::vector<SparseVec<Rational>> out;
  for (Index r = 0; r < s.dim(); ++r) out.push_back(sparse_of<Rational>(s.vector(r)));
  return out;
}

std::optional<std::vector<SparseVec<ModP>>> sparse_basis_mod_p(const Subspace& s) {
  std::vector<SparseVec<ModP>> out;
  for (Index r = 0; r < s.dim(); ++r) {
    SparseVec<ModP> v;
    for (Index j = 0; j < s.ambient_dim(); ++j) {
      if (is_zero(s.basis()(r, j))) continue;
      auto m = ModP::from_rational(s.basis()(r, j));
      if (!m) return std::nullopt;
      v.emplace_back(static_cast<int>(j), *m);
    }
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

bool is_subalgebra(const LieAlgebra& L, const Subspace& s) {
  const auto basis = sparse_basis(s);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!s.contains(bracket_sparse(L, basis[i], basis[j]))) return false;
    }
  }
  return true;
}

Subspace derived_subalgebra(const LieAlgebra& L, const Subspace& s) {
  if (!is_subalgebra(L, s)) throw LieError("derived_subalgebra: argument is not a subalgebra");
  const auto basis = sparse_basis(s);
  const auto basis_mod = sparse_basis_mod_p(s);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  }
  VectorStream stream;
  stream.count = static_cast<Index>(pairs.size());
  stream.exact = [&](Index k) {
    const auto [i, j] = pairs[static_cast<std::size_t>(k)];
    return bracket_sparse(L, basis[i], basis[j]);
  };
  if (basis_mod) {
    stream.modular = [&](Index k) {
      const auto [i, j] = pairs[static_cast<std::size_t>(k)];
      return bracket_sparse(L, (*basis_mod)[i], (*basis_mod)[j]);
    };
  }
  return bounded_span(stream, s);
}

Subspace subalgebra_closure(const LieAlgebra& L, const std::vector<Element>& gens, const Subspace* within) {
  const Index n = L.dim();
  if (within != nullptr) {
    for (const Element& g : gens) {
      if (!within->contains(g)) throw LieError("subalgebra_closure: generator outside `within`");
    }
  }
  const Index ceiling = within != nullptr ? within->dim() : n;
  std::vector<SparseVec<Rational>> sgens;
  for (const Element& g : gens) sgens.push_back(sparse_of<Rational>(g));

  IncrementalEchelon<Rational> echelon(n);
  std::deque<SparseVec<Rational>> queue;
  auto add = [&](const Element& v) {
    if (echelon.insert(v)) queue.push_back(sparse_of<Rational>(v));
  };
  for (const Element& g : gens) add(g);
  // Right-normed brackets [g1, [g2, ... [gk-1, gk]]] span the closure.
  while (!queue.empty() && echelon.rank() < ceiling) {
    const SparseVec<Rational> u = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : sgens) {
      add(bracket_sparse(L, g, u));
      if (echelon.rank() == ceiling) break;
    }
  }
  if (echelon.rank() == ceiling) return within != nullptr ? *within : Subspace::whole(n);
  return Subspace::span(echelon.as_matrix());
}

std::vector<int> basis_weights(const LieAlgebra& L, const Element& h) {
  if (h.size() != L.dim()) throw ShapeError("basis_weights: element of wrong length");
  const int np = L.num_positive();
  for (int i = 0; i < 2 * np; ++i) {
    if (!is_zero(h(i))) throw LieError("element does not lie in the Cartan subalgebra");
  }
  const RatVector values = simple_root_values(L.root_system(), h.tail(L.rank()));
  Eigen::VectorXi ivalues(L.rank());
  for (int i = 0; i < L.rank(); ++i) {
    if (values(i).get_den() != 1) throw LieError("ad h has non-integral eigenvalues");
    ivalues(i) = static_cast<int>(values(i).get_num().get_si());
  }
  std::vector<int> w(static_cast<std::size_t>(L.dim()), 0);
  for (int a = 0; a < 2 * np; ++a) w[static_cast<std::size_t>(a)] = L.root_system().root(a).coeffs.dot(ivalues);
  return w;
}

QuotientWeights quotient_with_action(const LieAlgebra& L, const Subspace& s, const Subspace& t, const Element& h) {
  if (!s.contains(t)) throw LieError("quotient_with_action: t is not contained in s");
  const std::vector<int> w = basis_weights(L, h);
  auto stable = [&](const Subspace& sp) {
    for (Index r = 0; r < sp.dim(); ++r) {
      Element v = sp.vector(r);
      for (Index j = 0; j < v.size(); ++j) v(j) *= w[static_cast<std::size_t>(j)];
      if (!sp.contains(v)) return false;
    }
    return true;
  };
  if (!stable(s) || !stable(t)) throw LieError("quotient_with_action: subspace is not ad h-stable");

  // For an ad h-stable space, its intersection with g(k) is its projection.
  auto graded_dim = [&](const Subspace& sp, int k) -> Index {
    std::vector<Index> cols;
    for (Index j = 0; j < L.dim(); ++j) {
      if (w[static_cast<std::size_t>(j)] == k) cols.push_back(j);
    }
    RatMatrix sub(sp.dim(), static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) sub.col(static_cast<Index>(c)) = sp.basis().col(cols[c]);
    return rank(sub);
  };
  QuotientWeights out;
  out.dim = s.dim() - t.dim();
  const std::set<int> levels(w.begin(), w.end());
  for (int k : levels) {
    const Index mult = graded_dim(s, k) - graded_dim(t, k);
    for (Index i = 0; i < mult; ++i) out.weights.push_back(k);
  }
  return out;
}

// ---------------------------------------------------------------------------

Subspace bounded_span(const VectorStream& stream, const Subspace& ceiling) {
  const Index n = ceiling.ambient_dim();
  if (ceiling.dim() == 0) return ceiling;

  std::vector<Index> support;
  std::vector<Index> local(static_cast<std::size_t>(n), -1);
  for (Index j = 0; j < n; ++j) {
    if (!ceiling.basis().col(j).isZero()) {
      local[static_cast<std::size_t>(j)] = static_cast<Index>(support.size());
      support.push_back(j);
    }
  }
  const auto m = static_cast<Index>(support.size());
  auto compress = [&]<class S>(const Vector<S>& v) {
    Vector<S> out(m);
    for (Index j = 0; j < n; ++j) {
      const Index l = local[static_cast<std::size_t>(j)];
      if (l >= 0) {
        out(l) = v(j);
      } else if (!is_zero(v(j))) {
        throw LieError("bounded_span: vector outside the ceiling");
      }
    }
    return out;
  };

  std::vector<Index> chosen;
  std::vector<bool> is_chosen(static_cast<std::size_t>(stream.count), false);
  IncrementalEchelon<ModP> modular(m);
  for (Index k = 0; k < stream.count; ++k) {
    std::optional<ModVector> v;
    if (stream.modular) {
      v = stream.modular(k);
    } else {
      const Element e = stream.exact(k);
      if (auto r = reduce_mod_p(e)) v = r->col(0);
    }
    if (!v || modular.insert(compress(*v))) {
      chosen.push_back(k);
      is_chosen[static_cast<std::size_t>(k)] = true;
    }
    if (modular.rank() == ceiling.dim()) return ceiling;
  }

  IncrementalEchelon<Rational> exact(m);
  auto exact_insert = [&](Index k) { exact.insert(compress(stream.exact(k))); };
  for (Index k : chosen) exact_insert(k);
  for (Index k = 0; k < stream.count && exact.rank() < ceiling.dim(); ++k) {
    if (!is_chosen[static_cast<std::size_t>(k)]) exact_insert(k);
  }
  if (exact.rank() == ceiling.dim()) return ceiling;

  RatMatrix rows = RatMatrix::Zero(exact.rank(), n);
  for (Index r = 0; r < exact.rank(); ++r) {
    const RatVector& row = exact.rows()[static_cast<std::size_t>(r)];
    for (Index l = 0; l < m; ++l) rows(r, support[static_cast<std::size_t>(l)]) = row(l);
  }
  return Subspace::span(rows);
}

} // namespace nilorb
