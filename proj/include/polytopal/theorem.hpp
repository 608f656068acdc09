#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polytopal/face_lattice.hpp"
#include "polytopal/intpoly.hpp"
#include "polytopal/linalg.hpp"
#include "polytopal/polytope.hpp"

namespace polytopal {

struct CheckResult {
  bool ok = false;
  std::string detail;  // failure locus when !ok
};

struct TheoremChecks {
  CheckResult p_minus_1_divides_n;
  CheckResult f_divisible;
  CheckResult q_symmetric;
  CheckResult q_unimodal;
  CheckResult q_divisible_by_p;
  CheckResult q_nonnegative;
  CheckResult q_constant_term_zero;
  CheckResult dehn_sommerville;
  CheckResult series_identity;
};

/// Everything the verification pipeline computes for one (P, A, p) input.
/// When gate_failure is nonempty the symmetry preconditions failed and the
/// conclusion checks were skipped.
struct TheoremReport {
  int n = 0;
  long p = 0;
  long r = 0;
  std::vector<long> f;  // f_{-1}..f_{n-1}
  IntPolynomial ordinary;
  IntPolynomial generalized;
  IntPolynomial q;
  IntPolynomial eigenspace;  // polynomial in t
  std::string gate_failure;
  TheoremChecks checks;
  std::vector<std::pair<long, long>> orbit_summary;  // (orbit length, count)

  bool preconditions_ok() const { return gate_failure.empty(); }
  bool all_checks_pass() const;
};

/// Deficiency polynomial: htilde minus the cyclotomic power, exact.
/// Requires deg(htilde) == r(p-1).
IntPolynomial q_polynomial(const IntPolynomial& htilde, long p, long r);

/// P_chi(t) with coefficient q_j / p at t^(2j); the same polynomial for every
/// primitive p-th root chi. Throws TheoremViolation when p does not divide q.
IntPolynomial eigenspace_series(const IntPolynomial& htilde, long p, long r);

/// Unimodality of the generalized h-polynomial, independent of any symmetry.
bool verify_unimodality_of_htilde(const IntPolynomial& htilde);

/// Full verification pipeline for a claimed order-p symmetry A of P.
TheoremReport verify_theorem(const Polytope& P, const RatMatrix& A, long p);

}  // namespace polytopal
