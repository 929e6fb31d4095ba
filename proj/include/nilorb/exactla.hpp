#pragma once

// Exact linear algebra over Q and F_p on Eigen dense containers.
//
// All routines treat a matrix as a list of row vectors: "row space", "basis"
// and "kernel" below always refer to rows. Nothing here uses floating point.

#include "nilorb/scalar.hpp"

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nilorb {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;
using ModMatrix = Matrix<ModP>;
using ModVector = Vector<ModP>;

class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class PivotRule {
  FirstNonzero,    // first row (in order) with a nonzero entry in the column
  LargestMagnitude // row whose entry has the largest |numerator * denominator|
};

/// Reduced row-echelon form: pivots are 1, pivot columns are unit columns,
/// zero rows dropped. `pivots[r]` is the pivot column of row r.
template <class S>
struct Echelon {
  Matrix<S> rows;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

namespace detail {

template <class S>
S magnitude_key(const S& x) {
  return x;
}
inline Rational magnitude_key(const Rational& x) {
  return abs(x.get_num() * x.get_den());
}

// Plain Gauss-Jordan over a field.
template <class S>
Echelon<S> rref_field(Matrix<S> m, PivotRule rule) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index best = -1;
    for (Index i = r; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      if (best < 0) {
        best = i;
        if (rule == PivotRule::FirstNonzero) break;
        continue;
      }
      if constexpr (std::is_same_v<S, Rational>) {
        if (magnitude_key(m(i, c)) > magnitude_key(m(best, c))) best = i;
      }
    }
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    const S inv = S(1) / m(r, c);
    for (Index j = c; j < cols; ++j) {
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (Index j = c; j < cols; ++j) {
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon<S> out;
  out.rows = m.topRows(r);
  out.pivots = std::move(pivots);
  return out;
}

} // namespace detail

/// Reduced row-echelon form. Over Q the elimination is fraction-free: rows are
/// scaled to primitive integer vectors, eliminated by integer cross
/// multiplication with content removal, and only normalized to pivot 1 at the
/// end. Over F_p it is plain Gauss-Jordan.
template <class S>
Echelon<S> rref(const Matrix<S>& m, PivotRule rule = PivotRule::FirstNonzero) {
  return detail::rref_field(m, rule);
}
template <>
Echelon<Rational> rref(const RatMatrix& m, PivotRule rule);

/// Gauss-Jordan with rational pivoting (no fraction-free stage).
inline Echelon<Rational> rref_rational_pivoting(const RatMatrix& m,
                                                PivotRule rule = PivotRule::FirstNonzero) {
  return detail::rref_field(m, rule);
}

template <class S>
Index rank(const Matrix<S>& m) {
  return rref(m).rank();
}

/// Rows form a basis of {x : m x = 0}; one row per free column, with a 1 in
/// that column and 0 in the other free columns.
template <class S>
Matrix<S> kernel(const Matrix<S>& m) {
  const Echelon<S> e = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<S> out = Matrix<S>::Zero(cols - e.rank(), cols);
  Index k = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    out(k, f) = S(1);
    for (Index r = 0; r < e.rank(); ++r) {
      if (!is_zero(e.rows(r, f))) out(k, e.pivots[static_cast<std::size_t>(r)]) = -e.rows(r, f);
    }
    ++k;
  }
  return out;
}

/// One solution of m x = rhs (free variables set to 0), or nullopt.
template <class S>
std::optional<Vector<S>> solve(const Matrix<S>& m, const Vector<S>& rhs) {
  if (rhs.size() != m.rows()) throw ShapeError("solve: rhs length does not match row count");
  Matrix<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = rhs;
  const Echelon<S> e = rref(aug);
  Vector<S> x = Vector<S>::Zero(m.cols());
  for (Index r = 0; r < e.rank(); ++r) {
    const Index p = e.pivots[static_cast<std::size_t>(r)];
    if (p == m.cols()) return std::nullopt;
    x(p) = e.rows(r, m.cols());
  }
  return x;
}

/// Canonical (rref) basis of the intersection of the row spaces of a and b.
template <class S>
Matrix<S> intersect(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.cols()) throw ShapeError("intersect: column counts differ");
  const Matrix<S> ea = rref(a).rows, eb = rref(b).rows;
  // x A = y B  <=>  [x y] [A; -B] = 0
  Matrix<S> stacked(ea.rows() + eb.rows(), a.cols());
  stacked.topRows(ea.rows()) = ea;
  stacked.bottomRows(eb.rows()) = -eb;
  const Matrix<S> ker = kernel<S>(stacked.transpose());
  Matrix<S> span = ker.leftCols(ea.rows()) * ea;
  return rref(span).rows;
}

template <class S>
bool member(const Vector<S>& v, const Matrix<S>& basis) {
  if (basis.cols() != v.size()) throw ShapeError("member: vector length does not match basis");
  const Echelon<S> e = rref(basis);
  Vector<S> w = v;
  for (Index r = 0; r < e.rank(); ++r) {
    const Index p = e.pivots[static_cast<std::size_t>(r)];
    if (is_zero(w(p))) continue;
    const S f = w(p);
    for (Index j = 0; j < w.size(); ++j) {
      if (!is_zero(e.rows(r, j))) w(j) -= f * e.rows(r, j);
    }
  }
  for (Index j = 0; j < w.size(); ++j) {
    if (!is_zero(w(j))) return false;
  }
  return true;
}

/// Semi-echelon basis grown one vector at a time. Rows keep their insertion
/// order; each has pivot 1 and is zero in the pivots of earlier rows.
template <class S>
class IncrementalEchelon {
public:
  explicit IncrementalEchelon(Index length) : length_(length) {}

  Index length() const { return length_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  const std::vector<Vector<S>>& rows() const { return rows_; }

  /// Reduce v in place; returns true if a nonzero residue remains.
  bool reduce(Vector<S>& v) const {
    if (v.size() != length_) throw ShapeError("IncrementalEchelon: length mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Index p = pivots_[k];
      if (is_zero(v(p))) continue;
      const S f = v(p);
      const Vector<S>& row = rows_[k];
      for (Index j = 0; j < length_; ++j) {
        if (!is_zero(row(j))) v(j) -= f * row(j);
      }
    }
    for (Index j = 0; j < length_; ++j) {
      if (!is_zero(v(j))) return true;
    }
    return false;
  }

  bool contains(Vector<S> v) const { return !reduce(v); }

  /// Adds v if independent of the current rows.
  bool insert(Vector<S> v) {
    if (!reduce(v)) return false;
    Index p = 0;
    while (is_zero(v(p))) ++p;
    const S inv = S(1) / v(p);
    for (Index j = p; j < length_; ++j) {
      if (!is_zero(v(j))) v(j) *= inv;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  Matrix<S> as_matrix() const {
    Matrix<S> m(rank(), length_);
    for (Index r = 0; r < rank(); ++r) m.row(r) = rows_[static_cast<std::size_t>(r)].transpose();
    return m;
  }

private:
  Index length_;
  std::vector<Vector<S>> rows_;
  std::vector<Index> pivots_;
};

/// Image of a rational matrix in F_p; nullopt if some denominator vanishes.
std::optional<ModMatrix> reduce_mod_p(const RatMatrix& m);

} // namespace nilorb
