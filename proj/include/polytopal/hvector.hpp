#pragma once

#include <unordered_map>
#include <vector>

#include "polytopal/face_lattice.hpp"
#include "polytopal/intpoly.hpp"

namespace polytopal {

/// Memo for the g-recursion, keyed by face identity within one lattice.
using GCache = std::unordered_map<FaceId, IntPolynomial>;

/// Ordinary h-polynomial sum_j f_{j-1} (x-1)^(n-j) from the f-vector
/// (f_{-1}, f_0, ..., f_{n-1}).
IntPolynomial ordinary_h(const std::vector<long>& f, int n);

/// g-polynomial of one face: 1 for the empty face, otherwise the truncation
/// of (1-x) times the h-polynomial of the interval below the face.
IntPolynomial g_polynomial(FaceId face, const FaceLattice& L, GCache& memo);

/// h-polynomial of the interval [empty, face].
IntPolynomial generalized_h_of_face(FaceId face, const FaceLattice& L, GCache& memo);

/// Generalized h-polynomial of the whole lattice; degree is exactly dim.
IntPolynomial generalized_h(const FaceLattice& L);

/// g-polynomial of the whole polytope.
IntPolynomial g_of_polytope(const FaceLattice& L);

}  // namespace polytopal
