#include "nilorb/liealg.hpp"

#include <doctest.h>

#include <random>

using namespace nilorb;

namespace {

// Residual of the Jacobi identity on basis elements, over Z.
bool jacobi_holds(const LieAlgebra& L, int a, int b, int c) {
  std::vector<long> acc(static_cast<std::size_t>(L.dim()), 0);
  auto nested = [&](int x, int y, int z) {
    for (const Term& t : L.product(y, z)) {
      for (const Term& u : L.product(x, t.index)) acc[static_cast<std::size_t>(u.index)] += long{t.coeff} * u.coeff;
    }
  };
  nested(a, b, c);
  nested(b, c, a);
  nested(c, a, b);
  for (long v : acc) {
    if (v != 0) return false;
  }
  return true;
}

Element random_element(const LieAlgebra& L, std::mt19937& gen) {
  std::uniform_int_distribution<int> d(-3, 3);
  Element e(L.dim());
  for (int i = 0; i < L.dim(); ++i) e(i) = d(gen);
  return e;
}

} // namespace

TEST_CASE("dimensions of the exceptional algebras") {
  const std::vector<std::pair<const char*, int>> dims = {{"G2", 14}, {"F4", 52}, {"E6", 78}, {"E7", 133}, {"E8", 248}};
  for (const auto& [name, d] : dims) CHECK(LieAlgebra(TypeRank::parse(name)).dim() == d);
}

TEST_CASE("Jacobi identity exhaustive on basis triples for small algebras") {
  for (const char* name : {"A2", "B3", "C3", "D4", "G2", "F4"}) {
    const LieAlgebra L(TypeRank::parse(name));
    long failures = 0;
    for (int a = 0; a < L.dim(); ++a) {
      for (int b = a + 1; b < L.dim(); ++b) {
        for (int c = b + 1; c < L.dim(); ++c) failures += jacobi_holds(L, a, b, c) ? 0 : 1;
      }
    }
    INFO(name);
    CHECK(failures == 0);
  }
}

TEST_CASE("Jacobi identity on random E6 basis triples") {
  const LieAlgebra L(TypeRank::parse("E6"));
  std::mt19937 gen(3);
  std::uniform_int_distribution<int> d(0, L.dim() - 1);
  long failures = 0;
  for (int t = 0; t < 20000; ++t) failures += jacobi_holds(L, d(gen), d(gen), d(gen)) ? 0 : 1;
  CHECK(failures == 0);
}

TEST_CASE("bracket basics") {
  const LieAlgebra L(TypeRank::parse("G2"));
  std::mt19937 gen(5);
  const Element x = random_element(L, gen), y = random_element(L, gen), z = random_element(L, gen);
  CHECK(bracket(L, x, x).isZero());
  CHECK(bracket(L, x, y) == Element(-bracket(L, y, x)));
  const Element jac = bracket(L, x, bracket(L, y, z)) + bracket(L, y, bracket(L, z, x)) + bracket(L, z, bracket(L, x, y));
  CHECK(jac.isZero());

  // [h_a, x_a] = 2 x_a for the coroot h_a of every root a
  for (int a = 0; a < L.root_system().num_roots(); ++a) {
    Element h = L.zero();
    const Eigen::VectorXi co = L.root_system().coroot(a);
    for (int i = 0; i < L.rank(); ++i) h(L.cartan_index(i)) = co(i);
    CHECK(bracket(L, h, L.basis_element(a)) == Element(2 * L.basis_element(a)));
    CHECK(bracket(L, L.basis_element(a), L.basis_element(a < L.num_positive() ? a + L.num_positive() : a - L.num_positive())) == h);
  }
  CHECK_THROWS_AS(bracket(L, x, Element::Zero(3)), ShapeError);
}

TEST_CASE("ad is a derivation") {
  const LieAlgebra L(TypeRank::parse("G2"));
  std::mt19937 gen(9);
  const Element x = random_element(L, gen), y = random_element(L, gen);
  const RatMatrix adx = ad_matrix(L, x), ady = ad_matrix(L, y);
  CHECK(RatMatrix(adx * y) == bracket(L, x, y));
  // ad [x,y] = [ad x, ad y]
  CHECK(ad_matrix(L, bracket(L, x, y)) == RatMatrix(adx * ady - ady * adx));
}

TEST_CASE("centralizers") {
  const LieAlgebra L(TypeRank::parse("G2"));
  CHECK(centralizer(L, L.zero()).dim() == 14);
  // highest root vector: centralizer of dim 8 (minimal orbit has dim 6)
  const Subspace c = centralizer(L, L.basis_element(L.num_positive() - 1));
  CHECK(c.dim() == 8);
  CHECK(is_subalgebra(L, c));
}

TEST_CASE("derived subalgebra") {
  const LieAlgebra L(TypeRank::parse("G2"));
  CHECK(derived_subalgebra(L, Subspace::whole(L.dim())).dim() == L.dim());

  const Subspace c = centralizer(L, L.basis_element(L.num_positive() - 1));
  const Subspace d = derived_subalgebra(L, c);
  CHECK(c.contains(d));
  // d is an ideal of c
  for (Index i = 0; i < c.dim(); ++i) {
    for (Index j = 0; j < d.dim(); ++j) CHECK(d.contains(bracket(L, c.vector(i), d.vector(j))));
  }

  RatMatrix rows = RatMatrix::Zero(2, L.dim());
  rows(0, 0) = 1;
  rows(1, 1) = 1;
  CHECK_THROWS_AS(derived_subalgebra(L, Subspace::span(rows)), LieError);
}

TEST_CASE("subalgebra closure") {
  const LieAlgebra L(TypeRank::parse("F4"));
  CHECK(subalgebra_closure(L, {}).dim() == 0);
  std::vector<Element> gens;
  for (int i = 0; i < L.rank(); ++i) {
    gens.push_back(L.basis_element(i));
    gens.push_back(L.basis_element(i + L.num_positive()));
  }
  CHECK(subalgebra_closure(L, gens).dim() == L.dim());
  // positive simple root vectors generate the positive nilradical
  gens.clear();
  for (int i = 0; i < L.rank(); ++i) gens.push_back(L.basis_element(i));
  const Subspace n = subalgebra_closure(L, gens);
  CHECK(n.dim() == L.num_positive());
  CHECK(subalgebra_closure(L, gens, &n) == n);
}

TEST_CASE("quotient_with_action") {
  const LieAlgebra L(TypeRank::parse("G2"));
  Element h = L.zero();
  h(L.cartan_index(0)) = 1;
  h(L.cartan_index(1)) = 1;
  const Subspace c = centralizer(L, L.basis_element(L.num_positive() - 1));
  const QuotientWeights same = quotient_with_action(L, c, c, h);
  CHECK(same.dim == 0);
  CHECK(same.weights.empty());
  const QuotientWeights q = quotient_with_action(L, Subspace::whole(L.dim()), Subspace::zero(L.dim()), h);
  CHECK(q.dim == 14);
  CHECK(q.weights.size() == 14);
  CHECK_THROWS_AS(quotient_with_action(L, Subspace::zero(L.dim()), c, h), LieError);
  Element not_cartan = L.basis_element(0);
  CHECK_THROWS_AS(basis_weights(L, not_cartan), LieError);
}
