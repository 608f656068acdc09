#include "polytopal/generators.hpp"

#include <cassert>

#include "polytopal/errors.hpp"

namespace polytopal {

std::pair<Polytope, RatMatrix> cyclic_simplex(long p) {
  require_prime(p, "cyclic_simplex");
  const int n = static_cast<int>(p) - 1;
  std::vector<RatVector> pts;
  for (int i = 0; i < n; ++i) {
    RatVector e(static_cast<std::size_t>(n), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(e));
  }
  pts.push_back(RatVector(static_cast<std::size_t>(n), Rational(-1)));

  // Columns: A e_i = e_(i+1) for i < n, A e_n = -(e_1 + ... + e_n).
  RatMatrix A(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; ++i) A(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(i)) = 1;
  for (int i = 0; i < n; ++i) A(static_cast<std::size_t>(i), static_cast<std::size_t>(n) - 1) = -1;
  return {make_polytope(n, std::move(pts)), std::move(A)};
}

std::pair<Polytope, RatMatrix> adin_construction(long p, long r) {
  require_prime(p, "adin_construction");
  if (r < 1) throw PreconditionError("adin_construction: r must be >= 1");
  auto [S, B] = cyclic_simplex(p);
  const int block = static_cast<int>(p) - 1;
  const int n = static_cast<int>(r) * block;

  std::vector<RatVector> pts;
  RatMatrix A(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long k = 0; k < r; ++k) {
    const std::size_t base = static_cast<std::size_t>(k * block);
    for (const auto& v : S.vertices()) {
      RatVector w(static_cast<std::size_t>(n), Rational(0));
      for (int i = 0; i < block; ++i) w[base + static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)];
      pts.push_back(std::move(w));
    }
    for (int i = 0; i < block; ++i)
      for (int j = 0; j < block; ++j)
        A(base + static_cast<std::size_t>(i), base + static_cast<std::size_t>(j)) =
            B(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return {make_polytope(n, std::move(pts)), std::move(A)};
}

Polytope hypercube(int n) {
  if (n < 1) throw PreconditionError("hypercube: n must be >= 1");
  std::vector<RatVector> pts;
  for (long mask = 0; mask < (1L << n); ++mask) {
    RatVector v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      v[static_cast<std::size_t>(k)] = ((mask >> (n - 1 - k)) & 1) ? -1 : 1;
    pts.push_back(std::move(v));
  }
  return make_polytope(n, std::move(pts));
}

Polytope cross_polytope(int n) {
  if (n < 1) throw PreconditionError("cross_polytope: n must be >= 1");
  std::vector<RatVector> pts;
  for (int k = 0; k < n; ++k) {
    for (int sign : {1, -1}) {
      RatVector v(static_cast<std::size_t>(n), Rational(0));
      v[static_cast<std::size_t>(k)] = sign;
      pts.push_back(std::move(v));
    }
  }
  return make_polytope(n, std::move(pts));
}

Polytope simplex(int n) {
  if (n < 1) throw PreconditionError("simplex: n must be >= 1");
  std::vector<RatVector> pts;
  for (int i = 0; i < n; ++i) {
    RatVector e(static_cast<std::size_t>(n), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(e));
  }
  pts.push_back(RatVector(static_cast<std::size_t>(n), Rational(-1)));
  return make_polytope(n, std::move(pts));
}

FaceLattice lattice_product(const FaceLattice& a, const FaceLattice& b) {
  const std::size_t m1 = a.vertex_count(), m2 = b.vertex_count();
  const std::size_t m = m1 * m2;
  std::vector<Face> faces;
  faces.push_back(Face{VertexSet(m), -1});
  for (const auto& fa : a.faces()) {
    if (fa.dim == -1) continue;
    for (const auto& fb : b.faces()) {
      if (fb.dim == -1) continue;
      VertexSet verts(m);
      for (int i : fa.verts.indices())
        for (int j : fb.verts.indices())
          verts.set(static_cast<std::size_t>(i) * m2 + static_cast<std::size_t>(j));
      faces.push_back(Face{std::move(verts), fa.dim + fb.dim});
    }
  }
  return FaceLattice(a.dim() + b.dim(), m, std::move(faces));
}

FaceLattice lattice_pyramid(const FaceLattice& base) {
  const std::size_t m = base.vertex_count() + 1;
  const std::size_t apex = base.vertex_count();
  std::vector<Face> faces;
  for (const auto& f : base.faces()) {
    VertexSet plain(m);
    for (int i : f.verts.indices()) plain.set(static_cast<std::size_t>(i));
    VertexSet coned = plain;
    coned.set(apex);
    faces.push_back(Face{std::move(plain), f.dim});
    faces.push_back(Face{std::move(coned), f.dim + 1});
  }
  return FaceLattice(base.dim() + 1, m, std::move(faces));
}

FaceLattice lattice_free_sum(const FaceLattice& a, const FaceLattice& b) {
  const std::size_t m1 = a.vertex_count(), m2 = b.vertex_count();
  const std::size_t m = m1 + m2;
  std::vector<Face> faces;
  for (const auto& fa : a.faces()) {
    if (fa.dim == a.dim()) continue;
    for (const auto& fb : b.faces()) {
      if (fb.dim == b.dim()) continue;
      VertexSet verts(m);
      for (int i : fa.verts.indices()) verts.set(static_cast<std::size_t>(i));
      for (int j : fb.verts.indices()) verts.set(m1 + static_cast<std::size_t>(j));
      faces.push_back(Face{std::move(verts), fa.dim + fb.dim + 1});
    }
  }
  VertexSet full(m);
  for (std::size_t i = 0; i < m; ++i) full.set(i);
  faces.push_back(Face{std::move(full), a.dim() + b.dim()});
  return FaceLattice(a.dim() + b.dim(), m, std::move(faces));
}

}  // namespace polytopal
