#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polytopal/errors.hpp"
#include "polytopal/generators.hpp"
#include "polytopal/hvector.hpp"
#include "polytopal/io.hpp"
#include "polytopal/theorem.hpp"
#include "test_support.hpp"

using namespace polytopal;
using namespace testsupport;

namespace {

RatMatrix neg_identity(std::size_t n) {
  RatMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i) A(i, i) = -1;
  return A;
}

}  // namespace

TEST_CASE("q polynomial of the 3-cube") {
  CHECK(q_polynomial(IntPolynomial{1, 5, 5, 1}, 2, 3) == IntPolynomial{0, 2, 2, 0});
}

TEST_CASE("q vanishes exactly on the minimal constructions") {
  for (auto [p, r] : {std::pair<long, long>{2, 2}, {2, 4}, {3, 2}, {5, 1}}) {
    IntPolynomial htilde = generalized_h(face_lattice(adin_construction(p, r).first));
    CHECK(q_polynomial(htilde, p, r).is_zero());
  }
  // Cross-polytopes have binomial generalized h, hence q = 0 for p = 2.
  for (int n = 1; n <= 5; ++n) {
    IntPolynomial htilde = generalized_h(face_lattice(cross_polytope(n)));
    CHECK(q_polynomial(htilde, 2, n).is_zero());
  }
}

TEST_CASE("q polynomial rejects inconsistent degrees") {
  CHECK_THROWS_WITH_AS(q_polynomial(IntPolynomial{1, 5, 5, 1}, 2, 2),
                       doctest::Contains("r inconsistent"), PreconditionError);
}

TEST_CASE("eigenspace series of the cube") {
  // q = (0,2,2,0), so P_chi(t) = t^2 + t^4.
  IntPolynomial series = eigenspace_series(IntPolynomial{1, 5, 5, 1}, 2, 3);
  CHECK(series == IntPolynomial{0, 0, 1, 0, 1});
}

TEST_CASE("eigenspace series vanishes on minimal constructions") {
  CHECK(eigenspace_series(IntPolynomial{1, 1, 1}, 3, 1).is_zero());
  CHECK(eigenspace_series(cyclotomic_power(5, 2), 5, 2).is_zero());
}

TEST_CASE("eigenspace series raises on a divisibility violation") {
  CHECK_THROWS_WITH_AS(eigenspace_series(IntPolynomial{1, 3, 1}, 2, 2),
                       doctest::Contains("not divisible"), TheoremViolation);
}

TEST_CASE("unimodality corollary check") {
  CHECK(verify_unimodality_of_htilde(IntPolynomial{1, 5, 5, 1}));
  CHECK(verify_unimodality_of_htilde(IntPolynomial{1, 2, 1}));
  CHECK(verify_unimodality_of_htilde(IntPolynomial{1, 1, 1, 1}));
}

TEST_CASE("full pipeline on the 3-cube with the antipodal map") {
  TheoremReport rep = verify_theorem(hypercube(3), neg_identity(3), 2);
  CHECK(rep.preconditions_ok());
  CHECK(rep.all_checks_pass());
  CHECK(rep.n == 3);
  CHECK(rep.r == 3);
  CHECK(rep.f == std::vector<long>{1, 8, 12, 6});
  CHECK(rep.ordinary == IntPolynomial{1, -1, 5, 1});
  CHECK(rep.generalized == IntPolynomial{1, 5, 5, 1});
  CHECK(rep.q == IntPolynomial{0, 2, 2, 0});
  CHECK(rep.eigenspace == IntPolynomial{0, 0, 1, 0, 1});
  REQUIRE(rep.orbit_summary.size() == 2);
  CHECK(rep.orbit_summary[0] == std::pair<long, long>{1, 1});
  CHECK(rep.orbit_summary[1] == std::pair<long, long>{2, 13});
  CHECK(report_exit_code(rep) == 0);
}

TEST_CASE("full pipeline on a minimal construction") {
  auto [P, A] = adin_construction(3, 2);
  TheoremReport rep = verify_theorem(P, A, 3);
  CHECK(rep.all_checks_pass());
  CHECK(rep.q.is_zero());
  CHECK(rep.eigenspace.is_zero());
  CHECK(rep.generalized == cyclotomic_power(3, 2));
}

TEST_CASE("a reflection fails the fixed-point-free gate") {
  RatMatrix reflection(3, 3);
  reflection(0, 0) = -1;
  reflection(1, 1) = 1;
  reflection(2, 2) = 1;
  TheoremReport rep = verify_theorem(hypercube(3), reflection, 2);
  CHECK_FALSE(rep.preconditions_ok());
  CHECK(rep.gate_failure.find("eigenvalue 1") != std::string::npos);
  // Lattice-level data is still reported.
  CHECK(rep.generalized == IntPolynomial{1, 5, 5, 1});
  CHECK(report_exit_code(rep) == 2);
}

TEST_CASE("a non-symmetry fails the gate with a structured reason") {
  RatMatrix scale2(3, 3);
  for (std::size_t i = 0; i < 3; ++i) scale2(i, i) = 2;
  TheoremReport rep = verify_theorem(hypercube(3), scale2, 2);
  CHECK_FALSE(rep.preconditions_ok());
  CHECK(rep.gate_failure.find("not a symmetry") != std::string::npos);
  CHECK(report_exit_code(rep) == 2);
}

TEST_CASE("exit code 3 is produced by a failed conclusion check") {
  TheoremReport rep;
  rep.checks.p_minus_1_divides_n.ok = true;
  rep.checks.f_divisible.ok = true;
  rep.checks.q_symmetric.ok = false;
  rep.checks.q_symmetric.detail = "synthetic";
  rep.checks.q_unimodal.ok = true;
  rep.checks.q_divisible_by_p.ok = true;
  rep.checks.q_nonnegative.ok = true;
  rep.checks.q_constant_term_zero.ok = true;
  rep.checks.dehn_sommerville.ok = true;
  rep.checks.series_identity.ok = true;
  CHECK(rep.preconditions_ok());
  CHECK_FALSE(rep.all_checks_pass());
  CHECK(report_exit_code(rep) == 3);
}

TEST_CASE("report serialization is stable and carries the data") {
  TheoremReport rep = verify_theorem(hypercube(3), neg_identity(3), 2);
  OrderedJson j = report_to_json(rep);
  CHECK(j["q"] == OrderedJson::array({"0", "2", "2", "0"}));
  CHECK(j["all_pass"] == true);
  CHECK(j["checks"]["q_divisible_by_p"]["ok"] == true);
  CHECK(report_to_json(rep).dump() == j.dump());

  std::string text = report_to_text(rep);
  CHECK(text.find("VERDICT: pass") != std::string::npos);
  CHECK(text.find("q: [0, 2, 2, 0]") != std::string::npos);
}

TEST_CASE("pipeline across symmetric corpus members") {
  struct Entry {
    Polytope P;
    RatMatrix A;
    long p;
  };
  std::vector<Entry> corpus;
  for (int n = 2; n <= 4; ++n)
    corpus.push_back({hypercube(n), neg_identity(static_cast<std::size_t>(n)), 2});
  for (int n = 1; n <= 4; ++n)
    corpus.push_back({cross_polytope(n), neg_identity(static_cast<std::size_t>(n)), 2});
  for (long p : {2L, 3L, 5L}) {
    auto [P, A] = cyclic_simplex(p);
    corpus.push_back({std::move(P), std::move(A), p});
  }
  for (auto [p, r] : {std::pair<long, long>{3, 2}, {2, 4}}) {
    auto [P, A] = adin_construction(p, r);
    corpus.push_back({std::move(P), std::move(A), p});
  }
  for (const auto& entry : corpus) {
    TheoremReport rep = verify_theorem(entry.P, entry.A, entry.p);
    CAPTURE(rep.n);
    CAPTURE(rep.p);
    CHECK(rep.all_checks_pass());
    // Eigenspace series is q/p with nonnegative integer coefficients.
    for (std::size_t i = 0; i < rep.eigenspace.coeffs().size(); ++i)
      CHECK(rep.eigenspace.coeffs()[i] >= 0);
    CHECK(rep.eigenspace.is_zero() ==
          (rep.generalized == cyclotomic_power(rep.p, static_cast<unsigned long>(rep.r))));
    // Every orbit of a nonempty proper face has length exactly p.
    for (const auto& [len, count] : rep.orbit_summary)
      CHECK((len == 1 || len == rep.p));
  }
}
