#include "nilorb/exactla.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace nilorb {

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("ModP: inverse of zero");
  return pow(kPrime - 2);
}

std::optional<ModP> ModP::from_rational(const Rational& q) {
  static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t));
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  if (den == 1) return from_raw(num);
  return from_raw(num) / from_raw(den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

using IntRow = std::vector<Integer>;

void make_primitive(IntRow& row) {
  Integer g = 0;
  for (const Integer& x : row) {
    if (x != 0) {
      g = gcd(g, x);
      if (g == 1) return;
    }
  }
  if (g > 1) {
    for (Integer& x : row) {
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

// Clears denominators row by row; scaling a row does not change the row space.
IntRow integer_row(const RatMatrix& m, Index r) {
  Integer l = 1;
  for (Index j = 0; j < m.cols(); ++j) {
    if (!is_zero(m(r, j))) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, j).get_den_mpz_t());
  }
  IntRow row(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) {
    if (is_zero(m(r, j))) continue;
    Integer& x = row[static_cast<std::size_t>(j)];
    x = l / m(r, j).get_den();
    x *= m(r, j).get_num();
  }
  make_primitive(row);
  return row;
}

// target <- a * target - b * pivot_row, then primitive.
void eliminate(IntRow& target, const IntRow& pivot_row, std::size_t col) {
  const Integer a = pivot_row[col];
  const Integer b = target[col];
  Integer g = gcd(a, b);
  const Integer sa = a / g, sb = b / g;
  Integer tmp;
  for (std::size_t j = 0; j < target.size(); ++j) {
    const bool tz = target[j] == 0, pz = pivot_row[j] == 0;
    if (pz) {
      if (!tz) target[j] *= sa;
      continue;
    }
    tmp = sb * pivot_row[j];
    if (tz) {
      target[j] = -tmp;
    } else {
      target[j] *= sa;
      target[j] -= tmp;
    }
  }
  make_primitive(target);
}

} // namespace

template <>
Echelon<Rational> rref(const RatMatrix& m, PivotRule rule) {
  const Index cols = m.cols();
  std::vector<IntRow> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (Index r = 0; r < m.rows(); ++r) {
    IntRow row = integer_row(m, r);
    if (std::any_of(row.begin(), row.end(), [](const Integer& x) { return x != 0; })) {
      rows.push_back(std::move(row));
    }
  }

  // Forward elimination.
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (Index c = 0; c < cols && top < rows.size(); ++c) {
    const auto col = static_cast<std::size_t>(c);
    std::size_t best = rows.size();
    for (std::size_t i = top; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      if (best == rows.size()) {
        best = i;
        if (rule == PivotRule::FirstNonzero) break;
      } else if (abs(rows[i][col]) > abs(rows[best][col])) {
        best = i;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[best], rows[top]);
    for (std::size_t i = top + 1; i < rows.size(); ++i) {
      if (rows[i][col] != 0) eliminate(rows[i], rows[top], col);
    }
    pivots.push_back(col);
    ++top;
  }
  rows.resize(top);

  // Back substitution, still over Z.
  for (std::size_t k = top; k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i][pivots[k]] != 0) eliminate(rows[i], rows[k], pivots[k]);
    }
  }

  Echelon<Rational> out;
  out.rows = RatMatrix::Zero(static_cast<Index>(top), cols);
  for (std::size_t r = 0; r < top; ++r) {
    const Integer& p = rows[r][pivots[r]];
    for (Index j = 0; j < cols; ++j) {
      const Integer& x = rows[r][static_cast<std::size_t>(j)];
      if (x == 0) continue;
      Rational& dst = out.rows(static_cast<Index>(r), j);
      dst = Rational(x, p);
      dst.canonicalize();
    }
    out.pivots.push_back(static_cast<Index>(pivots[r]));
  }
  return out;
}

std::optional<ModMatrix> reduce_mod_p(const RatMatrix& m) {
  ModMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      auto v = ModP::from_rational(m(i, j));
      if (!v) return std::nullopt;
      out(i, j) = *v;
    }
  }
  return out;
}

} // namespace nilorb
