// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact arithmetic; there are no tolerances anywhere.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polytopal/errors.hpp"
#include "polytopal/generators.hpp"
#include "polytopal/groupring.hpp"
#include "polytopal/hvector.hpp"
#include "polytopal/symmetry.hpp"
#include "polytopal/theorem.hpp"

using namespace polytopal;

namespace {

struct Criterion {
  std::string label;
  std::function<void(std::ostream&, bool&)> run;
};

#define EXPECT(cond, what)                                   \
  do {                                                       \
    if (!(cond)) {                                           \
      ok = false;                                            \
      detail << "\n    failed: " << (what);                  \
    }                                                        \
  } while (0)

struct CorpusPair {
  std::string name;
  Polytope P;
  RatMatrix A;
  long p;
};

RatMatrix neg_identity(std::size_t n) {
  RatMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i) A(i, i) = -1;
  return A;
}

const std::vector<CorpusPair>& symmetric_corpus() {
  static std::vector<CorpusPair> corpus = [] {
    std::vector<CorpusPair> c;
    for (int n = 2; n <= 5; ++n)
      c.push_back({"cube" + std::to_string(n), hypercube(n),
                   neg_identity(static_cast<std::size_t>(n)), 2});
    for (int n = 1; n <= 6; ++n)
      c.push_back({"cross" + std::to_string(n), cross_polytope(n),
                   neg_identity(static_cast<std::size_t>(n)), 2});
    for (long p : {2L, 3L, 5L, 7L}) {
      auto [P, A] = cyclic_simplex(p);
      c.push_back({"cyclic" + std::to_string(p), std::move(P), std::move(A), p});
    }
    for (auto [p, r] : {std::pair<long, long>{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                        {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}}) {
      auto [P, A] = adin_construction(p, r);
      c.push_back({"adin(" + std::to_string(p) + "," + std::to_string(r) + ")", std::move(P),
                   std::move(A), p});
    }
    return c;
  }();
  return corpus;
}

std::vector<Criterion> make_criteria() {
  std::vector<Criterion> criteria;

  criteria.push_back({"cube h-vectors: ordinary (1,-1,5,1), generalized (1,5,5,1)",
                      [](std::ostream& detail, bool& ok) {
    FaceLattice L = face_lattice(hypercube(3));
    EXPECT((ordinary_h(f_vector(L), 3) == IntPolynomial{1, -1, 5, 1}), "ordinary h of the 3-cube");
    EXPECT((generalized_h(L) == IntPolynomial{1, 5, 5, 1}), "generalized h of the 3-cube");
  }});

  criteria.push_back({"simplices of dim 1..8 have all h-entries equal to 1",
                      [](std::ostream& detail, bool& ok) {
    for (int n = 1; n <= 8; ++n) {
      FaceLattice L = face_lattice(simplex(n));
      IntPolynomial ord = ordinary_h(f_vector(L), n);
      IntPolynomial gen = generalized_h(L);
      EXPECT(ord.degree() == n && gen.degree() == n,
             "degree for simplex dim " + std::to_string(n));
      for (int j = 0; j <= n; ++j) {
        EXPECT(ord.coeff(static_cast<std::size_t>(j)) == 1,
               "ordinary h_" + std::to_string(j) + " of simplex dim " + std::to_string(n));
        EXPECT(gen.coeff(static_cast<std::size_t>(j)) == 1,
               "generalized h_" + std::to_string(j) + " of simplex dim " + std::to_string(n));
      }
    }
  }});

  criteria.push_back({"minimal constructions attain the cyclotomic power exactly",
                      [](std::ostream& detail, bool& ok) {
    for (auto [p, r] : {std::pair<long, long>{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                        {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}}) {
      auto [P, A] = adin_construction(p, r);
      IntPolynomial htilde = generalized_h(face_lattice(P));
      std::string name = "adin(" + std::to_string(p) + "," + std::to_string(r) + ")";
      EXPECT(htilde == cyclotomic_power(p, static_cast<unsigned long>(r)), "h-tilde of " + name);
      EXPECT(q_polynomial(htilde, p, r).is_zero(), "q of " + name);
    }
  }});

  criteria.push_back({"theorem conclusions hold for centrally symmetric cubes (n = 2..5)",
                      [](std::ostream& detail, bool& ok) {
    for (int n = 2; n <= 5; ++n) {
      TheoremReport rep =
          verify_theorem(hypercube(n), neg_identity(static_cast<std::size_t>(n)), 2);
      std::string name = "cube dim " + std::to_string(n);
      EXPECT(rep.preconditions_ok(), name + " preconditions");
      EXPECT(rep.checks.q_symmetric.ok, name + " q symmetric");
      EXPECT(rep.checks.q_unimodal.ok, name + " q unimodal");
      EXPECT(rep.checks.q_divisible_by_p.ok, name + " q even");
      EXPECT(rep.checks.q_nonnegative.ok, name + " q nonnegative");
      EXPECT(rep.q.coeff(0) == 0, name + " q_0 = 0");
      EXPECT(rep.q.coeff(static_cast<std::size_t>(n)) == 0, name + " q_n = 0");
      if (n == 3) EXPECT((rep.q == IntPolynomial{0, 2, 2, 0}), "cube dim 3 q = (0,2,2,0)");
    }
  }});

  criteria.push_back({"orbit divisibility: p | f_j and (p-1) | n on every corpus pair",
                      [](std::ostream& detail, bool& ok) {
    for (const auto& pair : symmetric_corpus()) {
      FaceLattice L = face_lattice(pair.P);
      SymmetryAction act = verify_symmetry(pair.P, L, pair.A, pair.p);
      DivisibilityReport rep = check_divisibility_consequences(act, L);
      EXPECT(rep.ok, pair.name + " divisibility");
      EXPECT(rep.r == L.dim() / (pair.p - 1), pair.name + " r value");
    }
  }});

  criteria.push_back({"eigenspace series equals q/p with nonnegative integer coefficients",
                      [](std::ostream& detail, bool& ok) {
    for (const auto& pair : symmetric_corpus()) {
      FaceLattice L = face_lattice(pair.P);
      const int n = L.dim();
      const long r = n / (pair.p - 1);
      IntPolynomial htilde = generalized_h(L);
      IntPolynomial q = q_polynomial(htilde, pair.p, r);
      IntPolynomial series = eigenspace_series(htilde, pair.p, r);
      for (std::size_t j = 0; j < q.coeffs().size(); ++j)
        EXPECT(series.coeff(2 * j) * Int(pair.p) == q.coeffs()[j],
               pair.name + " series coefficient " + std::to_string(j));
      for (const Int& c : series.coeffs()) EXPECT(c >= 0, pair.name + " nonnegativity");
      for (std::size_t j = 1; j < series.coeffs().size(); j += 2)
        EXPECT(series.coeffs()[j] == 0, pair.name + " odd coefficient");
      bool minimal = htilde == cyclotomic_power(pair.p, static_cast<unsigned long>(r));
      EXPECT(series.is_zero() == minimal, pair.name + " zero iff minimal");
    }
  }});

  criteria.push_back({"group-ring identities hold for p in {2,3,5,7}, r in 1..4",
                      [](std::ostream& detail, bool& ok) {
    for (long p : {2L, 3L, 5L, 7L})
      for (long r = 1; r <= 4; ++r) {
        auto [first, second] = lemma45_check(p, r);
        std::string name = "p=" + std::to_string(p) + " r=" + std::to_string(r);
        EXPECT(first, "identity (i) at " + name);
        EXPECT(second, "identity (ii) at " + name);
      }
  }});

  criteria.push_back({"truncated series pipeline matches the closed form on every pair",
                      [](std::ostream& detail, bool& ok) {
    for (const auto& pair : symmetric_corpus()) {
      FaceLattice L = face_lattice(pair.P);
      const int n = L.dim();
      const long r = n / (pair.p - 1);
      IntPolynomial htilde = generalized_h(L);
      EXPECT(series_identity_check(htilde, pair.p, r, 2 * static_cast<std::size_t>(n) + 2),
             pair.name + " series consistency");
    }
  }});

  criteria.push_back({"property suites: duality, coincidence, oracles, negative controls",
                      [](std::ostream& detail, bool& ok) {
    // Dehn-Sommerville across a corpus of >= 20 polytopes, including
    // non-simplicial and asymmetric ones.
    std::vector<std::pair<std::string, FaceLattice>> lattices;
    for (int n = 1; n <= 6; ++n)
      lattices.push_back({"simplex" + std::to_string(n), face_lattice(simplex(n))});
    for (int n = 2; n <= 5; ++n)
      lattices.push_back({"cube" + std::to_string(n), face_lattice(hypercube(n))});
    for (int n = 2; n <= 5; ++n)
      lattices.push_back({"cross" + std::to_string(n), face_lattice(cross_polytope(n))});
    FaceLattice square = face_lattice(hypercube(2));
    FaceLattice triangle = face_lattice(simplex(2));
    FaceLattice segment = face_lattice(simplex(1));
    FaceLattice prism = lattice_product(triangle, segment);
    lattices.push_back({"pyramid(square)", lattice_pyramid(square)});
    lattices.push_back({"pyramid^2(square)", lattice_pyramid(lattice_pyramid(square))});
    lattices.push_back({"pyramid(cube3)", lattice_pyramid(face_lattice(hypercube(3)))});
    lattices.push_back({"prism", prism});
    lattices.push_back({"square x triangle", lattice_product(square, triangle)});
    lattices.push_back({"prism x segment", lattice_product(prism, segment)});
    lattices.push_back({"dual(prism)", dual_lattice(prism)});
    lattices.push_back({"dual(pyramid(square))", dual_lattice(lattice_pyramid(square))});
    Polytope pentagon = make_polytope(
        2, {{Rational(0), Rational(2)}, {Rational(2), Rational(1)}, {Rational(2), Rational(-1)},
            {Rational(0), Rational(-2)}, {Rational(-2), Rational(0)}});
    lattices.push_back({"pentagon", face_lattice(pentagon)});
    lattices.push_back({"pentagon x segment", lattice_product(face_lattice(pentagon), segment)});

    std::vector<RatVector> frustum_pts;
    for (long sx : {1, -1})
      for (long sy : {1, -1}) {
        frustum_pts.push_back({Rational(sx), Rational(sy), Rational(-1)});
        frustum_pts.push_back({Rational(3 * sx, 2), Rational(3 * sy, 2), Rational(1)});
      }
    FaceLattice frustum = face_lattice(make_polytope(3, frustum_pts));
    lattices.push_back({"perturbed cube", frustum});

    EXPECT(lattices.size() >= 20, "corpus size " + std::to_string(lattices.size()));
    for (const auto& [name, L] : lattices) {
      IntPolynomial htilde = generalized_h(L);
      EXPECT(is_symmetric(htilde, L.dim()), name + " Dehn-Sommerville");
      EXPECT(htilde.coeff(0) == 1 &&
                 htilde.coeff(static_cast<std::size_t>(L.dim())) == 1,
             name + " unit ends");
      EXPECT(verify_unimodality_of_htilde(htilde), name + " unimodal");
    }

    // Simplicial members: ordinary and generalized h coincide.
    for (int n = 1; n <= 6; ++n) {
      FaceLattice L = face_lattice(simplex(n));
      EXPECT(generalized_h(L) == ordinary_h(f_vector(L), n),
             "simplicial coincidence, simplex " + std::to_string(n));
    }
    for (int n = 1; n <= 5; ++n) {
      FaceLattice L = face_lattice(cross_polytope(n));
      EXPECT(generalized_h(L) == ordinary_h(f_vector(L), n),
             "simplicial coincidence, cross " + std::to_string(n));
    }

    // Hull lattices match the combinatorial constructions up to dim 5.
    FaceLattice cube_comb = segment;
    FaceLattice cross_comb = segment;
    FaceLattice simplex_comb = segment;
    EXPECT(segment == face_lattice(simplex(1)), "segment lattice");
    for (int n = 2; n <= 5; ++n) {
      cube_comb = lattice_product(segment, cube_comb);
      cross_comb = lattice_free_sum(cross_comb, segment);
      simplex_comb = lattice_pyramid(simplex_comb);
      EXPECT(cube_comb == face_lattice(hypercube(n)), "cube oracle dim " + std::to_string(n));
      EXPECT(cross_comb == face_lattice(cross_polytope(n)),
             "cross oracle dim " + std::to_string(n));
      EXPECT(simplex_comb == face_lattice(simplex(n)),
             "simplex oracle dim " + std::to_string(n));
    }
    for (auto [p, r] : {std::pair<long, long>{2, 4}, {2, 5}, {3, 2}, {5, 1}}) {
      FaceLattice block = face_lattice(cyclic_simplex(p).first);
      FaceLattice comb = block;
      for (long i = 1; i < r; ++i) comb = lattice_free_sum(comb, block);
      EXPECT(comb == face_lattice(adin_construction(p, r).first),
             "adin oracle p=" + std::to_string(p) + " r=" + std::to_string(r));
    }

    // A rationally perturbed combinatorial cube keeps the cube values.
    EXPECT((generalized_h(frustum) == IntPolynomial{1, 5, 5, 1}), "perturbed cube h-tilde");

    // Negative controls.
    RatMatrix reflection(3, 3);
    reflection(0, 0) = -1;
    reflection(1, 1) = 1;
    reflection(2, 2) = 1;
    EXPECT(!is_fixed_point_free(reflection), "reflection eigenvalue detection");
    TheoremReport rep = verify_theorem(hypercube(3), reflection, 2);
    EXPECT(!rep.preconditions_ok(), "reflection rejected by the gate");
    EXPECT(rep.gate_failure.find("eigenvalue 1") != std::string::npos,
           "reflection failure reason");
    DivisibilityReport bad = divisibility_report({1, 8, 12, 6}, 3, 3);
    EXPECT(!bad.ok, "n=3, p=3 divisibility gate");
    EXPECT(!bad.failures.empty() && bad.failures[0] == "(p-1) does not divide n",
           "n=3, p=3 failure reason");
  }});

  return criteria;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = make_criteria();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream detail;
    bool ok = true;
    try {
      criteria[i].run(detail, ok);
    } catch (const std::exception& e) {
      ok = false;
      detail << "\n    exception: " << e.what();
    }
    std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << " - "
              << criteria[i].label << detail.str() << "\n";
    if (!ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
