#pragma once

#include <utility>

#include "polytopal/face_lattice.hpp"
#include "polytopal/linalg.hpp"
#include "polytopal/polytope.hpp"

namespace polytopal {

/// (p-1)-simplex spanned by e_1..e_(p-1) and -(e_1+...+e_(p-1)), with the
/// order-p map cycling those vertices.
std::pair<Polytope, RatMatrix> cyclic_simplex(long p);

/// Free sum of r copies of cyclic_simplex(p), one per orthogonal coordinate
/// block of R^(r(p-1)), with the block-diagonal order-p symmetry.
std::pair<Polytope, RatMatrix> adin_construction(long p, long r);

Polytope hypercube(int n);       // all (+-1)-vectors
Polytope cross_polytope(int n);  // +-e_i
Polytope simplex(int n);         // e_1..e_n and -(e_1+...+e_n)

/// Combinatorial constructions, usable as hull-independent oracles.
/// Product: nonempty faces are pairs of nonempty faces, dims add; vertex
/// (i, j) gets index i * m2 + j.
FaceLattice lattice_product(const FaceLattice& a, const FaceLattice& b);
/// Pyramid: faces are F and F + apex; the apex is the last vertex index.
FaceLattice lattice_pyramid(const FaceLattice& base);
/// Free sum: proper faces are joins of proper-or-empty face pairs, dims
/// dim F1 + dim F2 + 1; b's vertex indices are shifted past a's.
FaceLattice lattice_free_sum(const FaceLattice& a, const FaceLattice& b);

}  // namespace polytopal
