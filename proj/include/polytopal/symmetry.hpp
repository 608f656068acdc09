#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polytopal/face_lattice.hpp"
#include "polytopal/intpoly.hpp"
#include "polytopal/linalg.hpp"
#include "polytopal/polytope.hpp"

namespace polytopal {

/// A verified linear symmetry of prime order together with the vertex and
/// face permutations it induces.
struct SymmetryAction {
  RatMatrix matrix;
  std::vector<int> vertex_perm;  // vertex i maps to vertex vertex_perm[i]
  long order = 0;
  std::vector<FaceId> face_perm;  // face id -> face id, over the lattice used
};

/// Checks that A permutes the vertex set and has exact multiplicative order
/// p; builds the induced permutations. Throws PreconditionError with "not a
/// symmetry" or "order mismatch".
SymmetryAction verify_symmetry(const Polytope& P, const FaceLattice& L, const RatMatrix& A,
                               long p);
SymmetryAction verify_symmetry(const Polytope& P, const RatMatrix& A, long p);

/// True iff 1 is not an eigenvalue of A, i.e. det(A - I) != 0.
bool is_fixed_point_free(const RatMatrix& A);

/// Monic characteristic polynomial det(xI - A); coefficient i of x^i.
std::vector<Rational> char_poly(const RatMatrix& A);

/// The coefficient list as an IntPolynomial when all entries are integers.
std::optional<IntPolynomial> to_int_polynomial(const std::vector<Rational>& coeffs);

/// Orbits of the induced face permutation over the proper faces plus the
/// empty face (the full face is omitted). Deterministic order.
std::vector<std::vector<FaceId>> face_orbits(const SymmetryAction& act, const FaceLattice& L);

struct DivisibilityReport {
  bool ok = false;
  long r = 0;  // n / (p-1) when it divides
  std::vector<std::string> failures;
};

/// p | f_j for 0 <= j <= n-1 and (p-1) | n; names each offending j.
DivisibilityReport divisibility_report(const std::vector<long>& f, int n, long p);
DivisibilityReport check_divisibility_consequences(const SymmetryAction& act,
                                                   const FaceLattice& L);

/// All linear maps of exact order p permuting the vertex set, found by
/// backtracking over the images of a linearly independent spanning vertex
/// subset. Sorted canonically by matrix entries. Requires the origin in the
/// interior.
std::vector<SymmetryAction> find_prime_symmetries(const Polytope& P, const FaceLattice& L,
                                                  long p);

}  // namespace polytopal
