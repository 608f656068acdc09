#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polytopal/errors.hpp"
#include "polytopal/generators.hpp"
#include "polytopal/hvector.hpp"
#include "test_support.hpp"

using namespace polytopal;
using namespace testsupport;

namespace {

FaceId face_of_dim(const FaceLattice& L, int dim) {
  for (std::size_t i = 0; i < L.faces().size(); ++i)
    if (L.faces()[i].dim == dim) return static_cast<FaceId>(i);
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("ordinary h of the 3-cube") {
  CHECK(ordinary_h({1, 8, 12, 6}, 3) == IntPolynomial{1, -1, 5, 1});
}

TEST_CASE("ordinary h of simplices is all ones") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<long> f{1};
    for (int j = 1; j <= n; ++j) f.push_back(binomial(n + 1, j).get_si());
    IntPolynomial h = ordinary_h(f, n);
    for (int j = 0; j <= n; ++j) CHECK(h.coeff(static_cast<std::size_t>(j)) == 1);
    CHECK(h.degree() == n);
  }
}

TEST_CASE("ordinary h of cross-polytopes is binomial") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<long> f{1};
    for (int j = 1; j <= n; ++j) {
      Int e = binomial(n, j);
      for (int k = 0; k < j; ++k) e *= 2;
      f.push_back(e.get_si());
    }
    IntPolynomial h = ordinary_h(f, n);
    for (int j = 0; j <= n; ++j) CHECK(h.coeff(static_cast<std::size_t>(j)) == binomial(n, j));
  }
}

TEST_CASE("ordinary h rejects a bad f-vector length") {
  CHECK_THROWS_AS(ordinary_h({1, 8, 12}, 3), PreconditionError);
}

TEST_CASE("ordinary h satisfies h_n = 1 and h_(n-1) = f_0 - n") {
  FaceLattice L = face_lattice(hypercube(4));
  std::vector<long> f = f_vector(L);
  IntPolynomial h = ordinary_h(f, 4);
  CHECK(h.coeff(4) == 1);
  CHECK(h.coeff(3) == f[1] - 4);
}

TEST_CASE("g of the empty face, a vertex, and an edge") {
  FaceLattice L = face_lattice(hypercube(3));
  GCache memo;
  CHECK(g_polynomial(L.empty_face(), L, memo) == IntPolynomial{1});
  CHECK(g_polynomial(face_of_dim(L, 0), L, memo) == IntPolynomial{1});
  CHECK(g_polynomial(face_of_dim(L, 1), L, memo) == IntPolynomial{1});
  // A square facet of the cube: h = 1 + 2x + x^2, so g = 1 + x... truncated
  // at floor(2/2) = 1 of (1-x)h = 1 + x - x^2 - x^3.
  CHECK(g_polynomial(face_of_dim(L, 2), L, memo) == IntPolynomial{1, 1});
}

TEST_CASE("generalized h of the square by hand recursion") {
  FaceLattice L = face_lattice(hypercube(2));
  CHECK(generalized_h(L) == IntPolynomial{1, 2, 1});
}

TEST_CASE("generalized h of the 3-cube") {
  CHECK(generalized_h(face_lattice(hypercube(3))) == IntPolynomial{1, 5, 5, 1});
}

TEST_CASE("generalized h of simplices is all ones") {
  for (int n = 1; n <= 8; ++n) {
    IntPolynomial h = generalized_h(face_lattice(simplex(n)));
    CHECK(h.degree() == n);
    for (int j = 0; j <= n; ++j) CHECK(h.coeff(static_cast<std::size_t>(j)) == 1);
  }
}

TEST_CASE("g of the whole polytope") {
  CHECK(g_of_polytope(face_lattice(hypercube(3))) == IntPolynomial{1, 4});
  for (int n = 1; n <= 6; ++n)
    CHECK(g_of_polytope(face_lattice(simplex(n))) == IntPolynomial{1});
}

TEST_CASE("simplicial polytopes: ordinary and generalized h coincide") {
  std::vector<FaceLattice> simplicial;
  for (int n = 1; n <= 5; ++n) simplicial.push_back(face_lattice(simplex(n)));
  for (int n = 1; n <= 5; ++n) simplicial.push_back(face_lattice(cross_polytope(n)));
  // Random simplicial hulls in low dimension (generic points).
  Rng rng(5150);
  int accepted = 0;
  while (accepted < 6) {
    int dim = 2 + static_cast<int>(rng.range(0, 1));
    std::vector<RatVector> pts;
    for (int i = 0; i < dim + 4; ++i) {
      RatVector v;
      for (int k = 0; k < dim; ++k)
        v.push_back(make_rational(Int(rng.range(-40, 40)), Int(rng.range(1, 5))));
      pts.push_back(std::move(v));
    }
    if (affine_dim(pts) < dim) continue;
    Polytope P = make_polytope(dim, pts);
    bool is_simplicial = true;
    for (const auto& facet : P.facets())
      if (facet.incident_vertices.size() != static_cast<std::size_t>(dim)) is_simplicial = false;
    if (!is_simplicial) continue;
    simplicial.push_back(face_lattice(P));
    ++accepted;
  }
  for (const auto& L : simplicial)
    CHECK(generalized_h(L) == ordinary_h(f_vector(L), L.dim()));
}

TEST_CASE("generalized h is palindromic with unit ends across a corpus") {
  std::vector<FaceLattice> corpus;
  for (int n = 1; n <= 5; ++n) corpus.push_back(face_lattice(simplex(n)));
  for (int n = 2; n <= 4; ++n) corpus.push_back(face_lattice(hypercube(n)));
  for (int n = 2; n <= 4; ++n) corpus.push_back(face_lattice(cross_polytope(n)));
  corpus.push_back(lattice_pyramid(face_lattice(hypercube(2))));
  corpus.push_back(lattice_pyramid(lattice_pyramid(face_lattice(hypercube(2)))));
  corpus.push_back(lattice_pyramid(face_lattice(hypercube(3))));
  corpus.push_back(lattice_product(face_lattice(simplex(2)), face_lattice(simplex(1))));
  corpus.push_back(lattice_product(face_lattice(hypercube(2)), face_lattice(simplex(2))));
  corpus.push_back(dual_lattice(lattice_product(face_lattice(simplex(2)), face_lattice(simplex(1)))));
  for (const auto& L : corpus) {
    IntPolynomial h = generalized_h(L);
    CAPTURE(L.dim());
    CHECK(h.degree() == L.dim());
    CHECK(h.coeff(0) == 1);
    CHECK(h.coeff(static_cast<std::size_t>(L.dim())) == 1);
    CHECK(is_symmetric(h, L.dim()));
    CHECK(is_unimodal(h, L.dim()));
    for (const Int& c : h.coeffs()) CHECK(c >= 0);
  }
}

TEST_CASE("generalized h depends only on the lattice") {
  std::vector<RatVector> pts;
  for (long sx : {1, -1})
    for (long sy : {1, -1}) {
      pts.push_back({Rational(sx), Rational(sy), Rational(-1)});
      pts.push_back({Rational(3 * sx, 2), Rational(3 * sy, 2), Rational(1)});
    }
  FaceLattice frustum = face_lattice(make_polytope(3, pts));
  CHECK(generalized_h(frustum) == IntPolynomial{1, 5, 5, 1});
}

TEST_CASE("per-face degree bounds of the h/g pair") {
  for (const FaceLattice& L : {face_lattice(hypercube(3)), face_lattice(cross_polytope(3)),
                               lattice_pyramid(face_lattice(hypercube(2)))}) {
    GCache memo;
    for (std::size_t i = 0; i < L.faces().size(); ++i) {
      const Face& face = L.faces()[i];
      if (face.dim < 0) continue;
      IntPolynomial h = generalized_h_of_face(static_cast<FaceId>(i), L, memo);
      IntPolynomial g = g_polynomial(static_cast<FaceId>(i), L, memo);
      CHECK(h.degree() == face.dim);
      CHECK(g.degree() <= face.dim / 2);
      CHECK(g == truncate(IntPolynomial{1, -1} * h, face.dim / 2));
    }
  }
}

TEST_CASE("shared cache and fresh caches agree") {
  FaceLattice L = face_lattice(hypercube(3));
  GCache shared;
  for (std::size_t i = 0; i < L.faces().size(); ++i) {
    GCache fresh;
    IntPolynomial with_fresh = g_polynomial(static_cast<FaceId>(i), L, fresh);
    IntPolynomial with_shared = g_polynomial(static_cast<FaceId>(i), L, shared);
    CHECK(with_fresh == with_shared);
  }
  CHECK(generalized_h(L) == generalized_h(L));
}
