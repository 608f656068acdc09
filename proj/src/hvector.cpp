#include "polytopal/hvector.hpp"

#include "polytopal/errors.hpp"

namespace polytopal {

IntPolynomial ordinary_h(const std::vector<long>& f, int n) {
  if (f.size() != static_cast<std::size_t>(n) + 1)
    throw PreconditionError("ordinary_h: f-vector length mismatch");
  IntPolynomial h;
  for (int j = 0; j <= n; ++j)
    h = h + binomial_power(-1, static_cast<unsigned long>(n - j)) * Int(f[static_cast<std::size_t>(j)]);
  return h;
}

IntPolynomial generalized_h_of_face(FaceId face, const FaceLattice& L, GCache& memo) {
  const Face& top = L.face(face);
  IntPolynomial h;
  for (std::size_t i = 0; i < L.faces().size(); ++i) {
    const Face& sub = L.faces()[i];
    if (sub.verts == top.verts || !sub.verts.is_subset_of(top.verts)) continue;
    IntPolynomial g = g_polynomial(static_cast<FaceId>(i), L, memo);
    h = h + binomial_power(-1, static_cast<unsigned long>(top.dim - sub.dim - 1)) * g;
  }
  return h;
}

IntPolynomial g_polynomial(FaceId face, const FaceLattice& L, GCache& memo) {
  if (face == L.empty_face()) return IntPolynomial::constant(1);
  if (auto it = memo.find(face); it != memo.end()) return it->second;
  IntPolynomial h = generalized_h_of_face(face, L, memo);
  IntPolynomial one_minus_x({1, -1});
  IntPolynomial g = truncate(one_minus_x * h, L.face(face).dim / 2);
  memo.emplace(face, g);
  return g;
}

IntPolynomial generalized_h(const FaceLattice& L) {
  GCache memo;
  return generalized_h_of_face(L.full_face(), L, memo);
}

IntPolynomial g_of_polytope(const FaceLattice& L) {
  GCache memo;
  IntPolynomial h = generalized_h_of_face(L.full_face(), L, memo);
  IntPolynomial one_minus_x({1, -1});
  return truncate(one_minus_x * h, L.dim() / 2);
}

}  // namespace polytopal
