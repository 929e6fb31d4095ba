#include "nilorb/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace nilorb {

TypeRank TypeRank::parse(std::string_view text) {
  if (text.size() < 2) throw TypeError("type must look like E8, F4, G2, A3, ...");
  TypeRank t;
  t.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  const std::string_view digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw TypeError("bad rank in type '" + std::string(text) + "'");
  }
  if (!t.admissible()) throw TypeError("inadmissible type " + std::string(text));
  return t;
}

bool TypeRank::admissible() const {
  switch (letter) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

namespace {

// Symmetric Gram matrix of the simple roots, Bourbaki numbering.
Eigen::MatrixXi simple_root_form(const TypeRank& t) {
  const int n = t.rank;
  Eigen::MatrixXi b = Eigen::MatrixXi::Zero(n, n);
  auto link = [&](int i, int j, int v) { b(i - 1, j - 1) = b(j - 1, i - 1) = v; };
  switch (t.letter) {
    case 'A':
      for (int i = 1; i <= n; ++i) b(i - 1, i - 1) = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) b(i - 1, i - 1) = 4;
      b(n - 1, n - 1) = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 1; i < n; ++i) b(i - 1, i - 1) = 2;
      b(n - 1, n - 1) = 4;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 1, n, -2);
      break;
    case 'D':
      for (int i = 1; i <= n; ++i) b(i - 1, i - 1) = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case 'E':
      for (int i = 1; i <= n; ++i) b(i - 1, i - 1) = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      b(0, 0) = b(1, 1) = 4;
      b(2, 2) = b(3, 3) = 2;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case 'G':
      b(0, 0) = 2;
      b(1, 1) = 6;
      link(1, 2, -3);
      break;
    default: throw TypeError("unknown type letter");
  }
  return b;
}

std::vector<int> key(const RootCoeffs& c) { return {c.data(), c.data() + c.size()}; }

bool root_before(const Root& a, const Root& b) {
  const int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return std::lexicographical_compare(b.coeffs.data(), b.coeffs.data() + b.coeffs.size(),
                                      a.coeffs.data(), a.coeffs.data() + a.coeffs.size());
}

} // namespace

RootSystem::RootSystem(TypeRank t) : type_(t) {
  if (!t.admissible()) throw TypeError("inadmissible type " + t.name());
  form_ = simple_root_form(t);
  const int n = t.rank;
  cartan_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cartan_(i, j) = 2 * form_(i, j) / form_(i, i);
  }
  build_roots();
  build_structure_constants();
}

void RootSystem::build_roots() {
  const int n = rank();
  std::vector<Root> found;
  std::map<std::vector<int>, int> seen;
  std::vector<Root> layer;
  for (int i = 0; i < n; ++i) {
    Root r{RootCoeffs::Unit(n, i)};
    layer.push_back(r);
    seen[key(r.coeffs)] = 1;
  }
  while (!layer.empty()) {
    std::vector<Root> next;
    for (const Root& beta : layer) {
      found.push_back(beta);
      const Eigen::VectorXi pair = pairings(beta.coeffs);
      for (int i = 0; i < n; ++i) {
        // alpha_i-string through beta: p - q = <beta, alpha_i^vee>.
        int p = 0;
        RootCoeffs down = beta.coeffs;
        while (true) {
          down(i) -= 1;
          if (!seen.count(key(down))) break;
          ++p;
        }
        const int q = p - pair(i);
        if (q <= 0) continue;
        RootCoeffs up = beta.coeffs;
        up(i) += 1;
        if (seen.emplace(key(up), 1).second) next.push_back(Root{up});
      }
    }
    layer = std::move(next);
  }
  std::sort(found.begin(), found.end(), root_before);
  positive_ = std::move(found);
  for (int i = 0; i < num_positive(); ++i) {
    lookup_[key(positive_[static_cast<std::size_t>(i)].coeffs)] = i;
    lookup_[key(-positive_[static_cast<std::size_t>(i)].coeffs)] = i + num_positive();
    norms_.push_back(inner_product(positive_[static_cast<std::size_t>(i)].coeffs,
                                   positive_[static_cast<std::size_t>(i)].coeffs));
  }
  const int total = num_roots();
  sum_.assign(static_cast<std::size_t>(total * total), -1);
  for (int a = 0; a < total; ++a) {
    for (int b = 0; b < total; ++b) {
      const RootCoeffs s = root(a).coeffs + root(b).coeffs;
      int& slot = sum_[static_cast<std::size_t>(a * total + b)];
      if (s.isZero()) {
        slot = -2;
      } else if (auto idx = index_of(s)) {
        slot = *idx;
      }
    }
  }
}

Root RootSystem::root(int index) const {
  const int np = num_positive();
  if (index < 0 || index >= 2 * np) throw TypeError("root index out of range");
  if (index < np) return positive_[static_cast<std::size_t>(index)];
  return -positive_[static_cast<std::size_t>(index - np)];
}

std::optional<int> RootSystem::index_of(const RootCoeffs& c) const {
  if (c.size() != rank()) return std::nullopt;
  auto it = lookup_.find(key(c));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::index_of(const Root& r) const {
  auto idx = index_of(r.coeffs);
  if (!idx) throw TypeError("not a root of " + type_.name());
  return *idx;
}

int RootSystem::inner_product(const RootCoeffs& a, const RootCoeffs& b) const {
  return a.dot(form_ * b);
}

Eigen::VectorXi RootSystem::coroot(int index) const {
  const int np = num_positive();
  const int pos = index % np;
  const RootCoeffs& c = positive_[static_cast<std::size_t>(pos)].coeffs;
  const int nrm = norms_[static_cast<std::size_t>(pos)];
  Eigen::VectorXi out(rank());
  for (int i = 0; i < rank(); ++i) out(i) = c(i) * form_(i, i) / nrm;
  return index < np ? out : Eigen::VectorXi(-out);
}

// N(a, b) for positive a, b with a before b and a + b a root.
int RootSystem::special_constant(int a, int b) const {
  return special_[static_cast<std::size_t>(a * num_positive() + b)];
}

// N(a, b) for arbitrary roots with a + b a root, in terms of the constants of
// positive pairs of smaller height.
int RootSystem::mixed_constant(int a, int b) const {
  const int np = num_positive();
  const bool pa = a < np, pb = b < np;
  if (pa && pb) return a < b ? special_constant(a, b) : -special_constant(b, a);
  if (!pa && !pb) return -mixed_constant(a - np, b - np);
  if (!pa) return -mixed_constant(b, a);
  const int s = sum_index(a, b);
  const int neg_s = s < np ? s + np : s - np;
  // a + b + (-s) = 0:  N(a,b)/(s,s) = N(b,-s)/(a,a) = N(-s,a)/(b,b).
  if (s < np) {
    const int v = norm(s) * mixed_constant(b, neg_s);
    return v / norm(a);
  }
  const int v = norm(s) * mixed_constant(neg_s, a);
  return v / norm(b);
}

void RootSystem::build_structure_constants() {
  const int np = num_positive();
  special_.assign(static_cast<std::size_t>(np * np), 0);
  for (int xi = rank(); xi < np; ++xi) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < xi; ++a) {
      for (int b = a + 1; b < xi; ++b) {
        if (sum_index(a, b) == xi) pairs.emplace_back(a, b);
      }
    }
    // The extraspecial pair has the smallest first member.
    const auto [ea, eb] = pairs.front();
    int p = 0;
    {
      RootCoeffs down = positive_[static_cast<std::size_t>(eb)].coeffs;
      const RootCoeffs& step = positive_[static_cast<std::size_t>(ea)].coeffs;
      while (true) {
        down -= step;
        if (!index_of(down)) break;
        ++p;
      }
    }
    const int n_ext = p + 1;
    special_[static_cast<std::size_t>(ea * np + eb)] = n_ext;
    const Rational xi_norm = norm(xi);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [c, d] = pairs[k];
      const int neg_c = c + np, neg_d = d + np;
      Rational acc = 0;
      const int b_minus_c = sum_index(eb, neg_c);
      if (b_minus_c >= 0) {
        acc += Rational(mixed_constant(eb, neg_c) * mixed_constant(ea, neg_d), norm(b_minus_c));
      }
      const int a_minus_c = sum_index(ea, neg_c);
      if (a_minus_c >= 0) {
        acc += Rational(mixed_constant(neg_c, ea) * mixed_constant(eb, neg_d), norm(a_minus_c));
      }
      Rational value = xi_norm / n_ext * acc;
      value.canonicalize();
      if (value.get_den() != 1) throw std::logic_error("non-integral structure constant");
      special_[static_cast<std::size_t>(c * np + d)] = static_cast<int>(value.get_num().get_si());
    }
  }

  const int total = num_roots();
  structconst_.assign(static_cast<std::size_t>(total * total), 0);
  for (int a = 0; a < total; ++a) {
    for (int b = 0; b < total; ++b) {
      if (sum_index(a, b) >= 0) {
        structconst_[static_cast<std::size_t>(a * total + b)] = mixed_constant(a, b);
      }
    }
  }
}

RootSystem build_root_system(TypeRank t) { return RootSystem(t); }

int structure_constant(const RootSystem& rs, const Root& a, const Root& b) {
  return rs.structure_constant(rs.index_of(a), rs.index_of(b));
}

RatVector simple_root_values(const RootSystem& rs, const RatVector& h_coords) {
  const int n = rs.rank();
  if (h_coords.size() != n) throw ShapeError("Cartan element has wrong length");
  RatVector out(n);
  for (int j = 0; j < n; ++j) {
    Rational v = 0;
    for (int i = 0; i < n; ++i) v += h_coords(i) * rs.cartan()(i, j);
    out(j) = v;
  }
  return out;
}

RatVector dominant_weyl_representative(const RootSystem& rs, const RatVector& h_coords) {
  RatVector c = h_coords;
  while (true) {
    const RatVector values = simple_root_values(rs, c);
    Index neg = -1;
    for (Index i = 0; i < values.size(); ++i) {
      if (sgn(values(i)) < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) return c;
    // s_i(h) = h - alpha_i(h) h_i
    c(neg) -= values(neg);
  }
}

} // namespace nilorb
