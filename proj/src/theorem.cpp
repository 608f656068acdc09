#include "polytopal/theorem.hpp"

#include <map>

#include "polytopal/errors.hpp"
#include "polytopal/groupring.hpp"
#include "polytopal/hvector.hpp"
#include "polytopal/symmetry.hpp"

namespace polytopal {

bool TheoremReport::all_checks_pass() const {
  return preconditions_ok() && checks.p_minus_1_divides_n.ok && checks.f_divisible.ok &&
         checks.q_symmetric.ok && checks.q_unimodal.ok && checks.q_divisible_by_p.ok &&
         checks.q_nonnegative.ok && checks.q_constant_term_zero.ok &&
         checks.dehn_sommerville.ok && checks.series_identity.ok;
}

IntPolynomial q_polynomial(const IntPolynomial& htilde, long p, long r) {
  require_prime(p, "q_polynomial");
  if (r < 1) throw PreconditionError("q_polynomial: r must be >= 1");
  if (htilde.degree() != static_cast<int>(r * (p - 1)))
    throw PreconditionError("r inconsistent with dimension");
  return htilde - cyclotomic_power(p, static_cast<unsigned long>(r));
}

IntPolynomial eigenspace_series(const IntPolynomial& htilde, long p, long r) {
  IntPolynomial q = q_polynomial(htilde, p, r);
  if (!divisible_by(q, Int(p)))
    throw TheoremViolation("theorem violated: q not divisible by p");
  std::vector<Int> c;
  c.resize(2 * q.coeffs().size(), Int(0));
  for (std::size_t j = 0; j < q.coeffs().size(); ++j) c[2 * j] = q.coeffs()[j] / Int(p);
  return IntPolynomial(std::move(c));
}

bool verify_unimodality_of_htilde(const IntPolynomial& htilde) {
  return is_unimodal(htilde, htilde.degree() < 0 ? 0 : htilde.degree());
}

namespace {

CheckResult check(bool ok, const std::string& why_failed) {
  return CheckResult{ok, ok ? std::string() : why_failed};
}

}  // namespace

TheoremReport verify_theorem(const Polytope& P, const RatMatrix& A, long p) {
  TheoremReport rep;
  rep.n = P.ambient_dim();
  rep.p = p;

  FaceLattice L = face_lattice(P);
  rep.f = f_vector(L);
  rep.ordinary = ordinary_h(rep.f, rep.n);
  rep.generalized = generalized_h(L);
  rep.checks.dehn_sommerville =
      check(is_symmetric(rep.generalized, rep.n), "generalized h is not palindromic");

  SymmetryAction act;
  try {
    act = verify_symmetry(P, L, A, p);
  } catch (const PreconditionError& e) {
    rep.gate_failure = e.what();
    return rep;
  }
  if (!is_fixed_point_free(A)) {
    rep.gate_failure = "not fixed-point-free: A has eigenvalue 1";
    return rep;
  }

  DivisibilityReport div = check_divisibility_consequences(act, L);
  rep.checks.p_minus_1_divides_n = check(rep.n % (p - 1) == 0, "(p-1) does not divide n");
  std::string f_fail;
  for (const auto& s : div.failures)
    if (s.rfind("p does", 0) == 0) f_fail = s;
  bool f_ok = true;
  for (int j = 0; j < rep.n; ++j)
    if (rep.f[static_cast<std::size_t>(j) + 1] % p != 0) f_ok = false;
  rep.checks.f_divisible = check(f_ok, f_fail.empty() ? "f divisibility failed" : f_fail);
  if (!rep.checks.p_minus_1_divides_n.ok) {
    rep.gate_failure = "(p-1) does not divide n";
    return rep;
  }
  rep.r = rep.n / (p - 1);

  std::map<long, long> histogram;
  for (const auto& orbit : face_orbits(act, L)) ++histogram[static_cast<long>(orbit.size())];
  rep.orbit_summary.assign(histogram.begin(), histogram.end());

  rep.q = q_polynomial(rep.generalized, p, rep.r);
  rep.checks.q_symmetric = check(is_symmetric(rep.q, rep.n), "q is not palindromic about n");
  rep.checks.q_unimodal = check(is_unimodal(rep.q, rep.n), "q is not unimodal");
  rep.checks.q_divisible_by_p = check(divisible_by(rep.q, Int(p)), "q has a coefficient not divisible by p");
  bool nonneg = true;
  int bad_index = -1;
  for (std::size_t i = 0; i < rep.q.coeffs().size(); ++i)
    if (rep.q.coeffs()[i] < 0) {
      nonneg = false;
      bad_index = static_cast<int>(i);
      break;
    }
  rep.checks.q_nonnegative =
      check(nonneg, "q_" + std::to_string(bad_index) + " is negative");
  rep.checks.q_constant_term_zero = check(rep.q.coeff(0) == 0, "q_0 is nonzero");

  if (rep.checks.q_divisible_by_p.ok)
    rep.eigenspace = eigenspace_series(rep.generalized, p, rep.r);

  rep.checks.series_identity =
      check(series_identity_check(rep.generalized, p, rep.r,
                                  2 * static_cast<std::size_t>(rep.n) + 2),
            "truncated series does not match its closed form");
  return rep;
}

}  // namespace polytopal
