#include "nilorb/orbits.hpp"

#include <algorithm>
#include <bitset>
#include <cctype>
#include <random>
#include <sstream>

namespace nilorb {

WeightedDynkinDiagram::WeightedDynkinDiagram(std::vector<int> l) : labels(std::move(l)) {
  for (int x : labels) {
    if (x < 0 || x > 2) throw OrbitError("diagram labels must lie in {0,1,2}");
  }
}

WeightedDynkinDiagram WeightedDynkinDiagram::parse(std::string_view text) {
  std::vector<int> labels;
  bool expect_digit = true;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      if (expect_digit) throw OrbitError("malformed diagram: " + std::string(text));
      expect_digit = true;
    } else if (c >= '0' && c <= '9' && expect_digit) {
      labels.push_back(c - '0');
      expect_digit = false;
    } else {
      throw OrbitError("malformed diagram: " + std::string(text));
    }
  }
  if (labels.empty() || expect_digit) throw OrbitError("malformed diagram: " + std::string(text));
  return WeightedDynkinDiagram(std::move(labels));
}

std::string WeightedDynkinDiagram::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + labels[i]);
  }
  return s;
}

bool WeightedDynkinDiagram::is_zero() const {
  return std::all_of(labels.begin(), labels.end(), [](int x) { return x == 0; });
}

// ---------------------------------------------------------------------------

Grading::Grading(std::vector<int> weights) : weight_(std::move(weights)), position_(weight_.size()) {
  for (std::size_t i = 0; i < weight_.size(); ++i) {
    auto& idx = indices_[weight_[i]];
    position_[i] = static_cast<int>(idx.size());
    idx.push_back(static_cast<int>(i));
  }
}

const std::vector<int>& Grading::indices(int k) const {
  static const std::vector<int> empty;
  const auto it = indices_.find(k);
  return it == indices_.end() ? empty : it->second;
}

std::vector<int> Grading::degrees() const {
  std::vector<int> out;
  for (const auto& [k, _] : indices_) out.push_back(k);
  return out;
}

Subspace Grading::piece(int k) const {
  const auto n = static_cast<Index>(weight_.size());
  const std::vector<int>& idx = indices(k);
  Echelon<Rational> e{RatMatrix::Zero(static_cast<Index>(idx.size()), n), {}};
  for (std::size_t r = 0; r < idx.size(); ++r) {
    e.rows(static_cast<Index>(r), idx[r]) = 1;
    e.pivots.push_back(idx[r]);
  }
  return Subspace::from_echelon(std::move(e), n);
}

std::map<int, Subspace> Grading::pieces() const {
  std::map<int, Subspace> out;
  for (const auto& [k, _] : indices_) out.emplace(k, piece(k));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_rank(const LieAlgebra& L, const WeightedDynkinDiagram& d) {
  if (d.rank() != L.rank()) {
    throw OrbitError("diagram " + d.to_string() + " has " + std::to_string(d.rank()) + " labels, " +
                     L.type_rank().name() + " needs " + std::to_string(L.rank()));
  }
}

// Deterministic per (seed, diagram), independent of enumeration order.
std::mt19937_64 diagram_rng(std::uint64_t seed, const WeightedDynkinDiagram& d, std::uint64_t salt) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                   static_cast<std::uint32_t>(salt)};
  for (int x : d.labels) words.push_back(static_cast<std::uint32_t>(x));
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

// Uniform enough for picking coefficients, and identical on every platform.
int draw(std::mt19937_64& gen, int lo, int hi) {
  return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Necessary conditions from sl2 theory: dim g(k) >= dim g(k+2) for k >= 0.
bool dims_admissible(const Grading& g) {
  for (int k : g.degrees()) {
    if (k >= 0 && g.dim(k) < g.dim(k + 2)) return false;
  }
  return true;
}

bool generic_mod_p(const LieAlgebra& L, const Grading& g, const SparseVec<ModP>& e) {
  return rank(ad_block(L, g, e, 0)) == g.dim(2);
}

// h in [e, g(-2)], i.e. e and h extend to an sl2-triple.
bool neutral_mod_p(const LieAlgebra& L, const Grading& g, const SparseVec<ModP>& e, const Element& h) {
  const ModMatrix m = ad_block(L, g, e, -2);
  const std::vector<int>& g0 = g.indices(0);
  ModMatrix aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  for (std::size_t r = 0; r < g0.size(); ++r) {
    const auto v = ModP::from_rational(h(g0[r]));
    if (!v) return false;
    aug(static_cast<Index>(r), m.cols()) = *v;
  }
  return rank(m) == rank(aug);
}

constexpr std::uint64_t kDynkinSalt = 1;
constexpr std::uint64_t kSearchSalt = 2;

} // namespace

Element characteristic(const LieAlgebra& L, const WeightedDynkinDiagram& d) {
  check_rank(L, d);
  const int l = L.rank();
  RatMatrix ct(l, l);
  RatVector rhs(l);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) ct(i, j) = L.root_system().cartan()(j, i);
    rhs(i) = d.labels[static_cast<std::size_t>(i)];
  }
  const auto c = solve(ct, rhs);
  if (!c) throw OrbitError("Cartan matrix is singular");
  Element h = L.zero();
  for (int i = 0; i < l; ++i) h(L.cartan_index(i)) = (*c)(i);
  return h;
}

Grading grading_from_h(const LieAlgebra& L, const Element& h) { return Grading(basis_weights(L, h)); }

Grading grading_from_diagram(const LieAlgebra& L, const WeightedDynkinDiagram& d) {
  check_rank(L, d);
  const Eigen::Map<const Eigen::VectorXi> lab(d.labels.data(), L.rank());
  std::vector<int> w(static_cast<std::size_t>(L.dim()), 0);
  for (int a = 0; a < L.root_system().num_roots(); ++a) w[static_cast<std::size_t>(a)] = L.root_system().root(a).coeffs.dot(lab);
  return Grading(std::move(w));
}

bool dynkin_test(const LieAlgebra& L, const WeightedDynkinDiagram& d, int trials, std::uint64_t seed) {
  if (trials < 1) throw OrbitError("dynkin_test: trials must be positive");
  const Grading g = grading_from_diagram(L, d);
  if (d.is_zero()) return true;
  const std::vector<int>& g2 = g.indices(2);
  if (g2.empty() || !dims_admissible(g)) return false;
  std::mt19937_64 gen = diagram_rng(seed, d, kDynkinSalt);
  for (int t = 0; t < trials; ++t) {
    SparseVec<ModP> e;
    for (int i : g2) e.emplace_back(i, ModP(draw(gen, 1, 10000)));
    // Surjectivity alone is not enough (G2 with labels 1,1 passes it); the
    // dense G(0)-orbit must also contain an e completing to a triple with h.
    if (generic_mod_p(L, g, e)) return neutral_mod_p(L, g, e, characteristic(L, d));
  }
  return false;
}

// ---------------------------------------------------------------------------
// Representative search

namespace {

using Cover = std::bitset<128>;

class SubsetSearch {
public:
  SubsetSearch(const LieAlgebra& L, const Grading& g) : L_(L), g_(g), roots_(g.indices(2)) {
    const RootSystem& rs = L.root_system();
    const int n = static_cast<int>(roots_.size());
    for (int k = 0; k < n; ++k) all_.set(static_cast<std::size_t>(k));
    cover_.assign(roots_.size(), Cover{});
    // The image of x_b under ad g(0) lies in span{x_b} + span{x_{c+b} : c in Phi(0)}.
    for (int k = 0; k < n; ++k) {
      cover_[static_cast<std::size_t>(k)].set(static_cast<std::size_t>(k));
      for (int c : g.indices(0)) {
        if (L.is_cartan(c)) continue;
        const int s = rs.sum_index(c, roots_[static_cast<std::size_t>(k)]);
        if (s >= 0) cover_[static_cast<std::size_t>(k)].set(static_cast<std::size_t>(g.position(s)));
      }
    }
  }

  std::optional<std::vector<int>> run(int max_size) {
    for (int k = 1; k <= std::min<int>(max_size, static_cast<int>(roots_.size())); ++k) {
      chosen_.clear();
      if (visit(k, 0, Cover{})) return chosen_;
      if (exhausted()) break;
    }
    return std::nullopt;
  }

private:
  bool exhausted() const { return nodes_ > kNodeBudget || tests_ > kTestBudget; }

  bool visit(int k, std::size_t start, const Cover& covered) {
    if (static_cast<int>(chosen_.size()) == k) {
      if (covered != all_) return false;
      ++tests_;
      SparseVec<ModP> e;
      for (int p : chosen_) e.emplace_back(roots_[static_cast<std::size_t>(p)], ModP(1));
      return generic_mod_p(L_, g_, e);
    }
    const std::size_t remaining = static_cast<std::size_t>(k) - chosen_.size();
    for (std::size_t i = start; i + remaining <= roots_.size(); ++i) {
      if (++nodes_ > kNodeBudget || tests_ > kTestBudget) return false;
      const Cover next = covered | cover_[i];
      // every still-uncovered root must be reachable by the remaining picks
      if (remaining == 1 && next != all_) continue;
      chosen_.push_back(static_cast<int>(i));
      if (visit(k, i + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  static constexpr long kNodeBudget = 3'000'000;
  static constexpr long kTestBudget = 20'000;

  const LieAlgebra& L_;
  const Grading& g_;
  const std::vector<int>& roots_;
  std::vector<Cover> cover_;
  Cover all_;
  std::vector<int> chosen_;
  long nodes_ = 0, tests_ = 0;
};

} // namespace

Element find_representative(const LieAlgebra& L, const WeightedDynkinDiagram& d, std::uint64_t seed) {
  const Grading g = grading_from_diagram(L, d);
  Element e = L.zero();
  if (d.is_zero()) return e;
  const std::vector<int>& g2 = g.indices(2);
  if (g2.empty() || g2.size() > 128) throw OrbitError("no representative: g(2) is empty for " + d.to_string());

  if (auto subset = SubsetSearch(L, g).run(5)) {
    for (int p : *subset) e(g2[static_cast<std::size_t>(p)]) = 1;
    return e;
  }

  std::mt19937_64 gen = diagram_rng(seed, d, kSearchSalt);
  const int n = static_cast<int>(g2.size());
  auto accept = [&](const std::vector<int>& coeffs) {
    SparseVec<ModP> em;
    for (int i = 0; i < n; ++i) {
      if (coeffs[static_cast<std::size_t>(i)] != 0) em.emplace_back(g2[static_cast<std::size_t>(i)], ModP(coeffs[static_cast<std::size_t>(i)]));
    }
    if (!generic_mod_p(L, g, em)) return false;
    for (int i = 0; i < n; ++i) e(g2[static_cast<std::size_t>(i)]) = coeffs[static_cast<std::size_t>(i)];
    return true;
  };
  // sparse 0/1 vectors of growing support
  for (int k = 6; k <= n; ++k) {
    for (int t = 0; t < (k == n ? 1 : 30); ++t) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
      for (int i = 0; i < k; ++i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(draw(gen, i, n - 1))]);
      std::vector<int> coeffs(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < k; ++i) coeffs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = 1;
      if (accept(coeffs)) return e;
    }
  }
  for (int t = 0; t < 500; ++t) {
    std::vector<int> coeffs(static_cast<std::size_t>(n));
    for (int& c : coeffs) c = draw(gen, 1, 9);
    if (accept(coeffs)) return e;
  }
  throw OrbitError("representative search exhausted for " + d.to_string());
}

Sl2Triple complete_triple(const LieAlgebra& L, const Element& h, const Element& e) {
  if (h.size() != L.dim() || e.size() != L.dim()) throw ShapeError("complete_triple: element of wrong length");
  if (bracket(L, h, e) != Element(2 * e)) throw OrbitError("complete_triple: [h, e] != 2e");
  if (e.isZero()) throw OrbitError("complete_triple: e is zero");
  const Grading g = grading_from_h(L, h);
  const RatMatrix m = ad_block(L, g, sparse_of(e), -2);
  const std::vector<int>& g0 = g.indices(0);
  RatVector rhs(static_cast<Index>(g0.size()));
  for (std::size_t r = 0; r < g0.size(); ++r) rhs(static_cast<Index>(r)) = h(g0[r]);
  const auto sol = solve(m, rhs);
  if (!sol) throw OrbitError("complete_triple: h is not in [e, g(-2)]");
  Element f = L.zero();
  const std::vector<int>& gm2 = g.indices(-2);
  for (std::size_t c = 0; c < gm2.size(); ++c) f(gm2[c]) = (*sol)(static_cast<Index>(c));
  if (bracket(L, e, f) != h || bracket(L, h, f) != Element(-2 * f)) {
    throw OrbitError("complete_triple: verification failed");
  }
  return {e, h, f};
}

// ---------------------------------------------------------------------------

Index GradedCentralizer::dim() const {
  Index d = 0;
  for (const auto& [_, s] : pieces) d += s.dim();
  return d;
}

Subspace GradedCentralizer::total(Index ambient_dim) const {
  std::vector<Subspace> parts;
  for (const auto& [_, s] : pieces) parts.push_back(s);
  return direct_sum_disjoint(parts, ambient_dim);
}

GradedCentralizer graded_centralizer(const LieAlgebra& L, const Grading& g, const Element& e) {
  for (Index i = 0; i < e.size(); ++i) {
    if (!is_zero(e(i)) && g.weight(static_cast<int>(i)) != 2) throw OrbitError("graded_centralizer: e is not in g(2)");
  }
  const SparseVec<Rational> se = sparse_of(e);
  SparseVec<ModP> sm;
  for (const auto& [i, c] : se) {
    const auto m = ModP::from_rational(c);
    if (!m) {
      sm.clear();
      break;
    }
    sm.emplace_back(i, *m);
  }
  GradedCentralizer out;
  for (int k : g.degrees()) {
    const std::vector<int>& src = g.indices(k);
    const auto n = static_cast<Index>(src.size());
    // full column rank mod p certifies injectivity over Q
    if (!sm.empty() && rank(ad_block(L, g, sm, k)) == n) continue;
    const RatMatrix ker = kernel(ad_block(L, g, se, k));
    if (ker.rows() == 0) continue;
    RatMatrix rows = RatMatrix::Zero(ker.rows(), L.dim());
    for (Index c = 0; c < n; ++c) rows.col(src[static_cast<std::size_t>(c)]) = ker.col(c);
    out.pieces.emplace(k, Subspace::span(rows));
  }
  return out;
}

int orbit_dimension(const LieAlgebra& L, const NilpotentOrbit& o) {
  const Grading g = grading_from_h(L, o.triple.h);
  return L.dim() - static_cast<int>(graded_centralizer(L, g, o.triple.e).dim());
}

std::vector<NilpotentOrbit> enumerate_orbits(const LieAlgebra& L, std::uint64_t seed, int trials) {
  const int l = L.rank();
  std::vector<std::pair<int, NilpotentOrbit>> found;
  std::vector<int> labels(static_cast<std::size_t>(l), 0);
  while (true) {
    // odometer over {0,1,2}^l
    int i = l - 1;
    while (i >= 0 && labels[static_cast<std::size_t>(i)] == 2) labels[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++labels[static_cast<std::size_t>(i)];
    const WeightedDynkinDiagram d(labels);
    if (!dynkin_test(L, d, trials, seed)) continue;
    const Element h = characteristic(L, d);
    const Element e = find_representative(L, d, seed);
    NilpotentOrbit o{d, complete_triple(L, h, e), std::nullopt};
    // e is in the dense G(0)-orbit of g(2), so dim g_e = dim g(0) + dim g(1)
    const Grading g = grading_from_diagram(L, d);
    found.emplace_back(L.dim() - static_cast<int>(g.dim(0) + g.dim(1)), std::move(o));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second.diagram < b.second.diagram;
  });
  std::vector<NilpotentOrbit> out;
  for (auto& [_, o] : found) out.push_back(std::move(o));
  return out;
}

} // namespace nilorb
