#include "polytopal/symmetry.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "polytopal/errors.hpp"

namespace polytopal {

namespace {

std::vector<int> vertex_permutation(const Polytope& P, const RatMatrix& A) {
  const auto& verts = P.vertices();
  std::map<RatVector, int> lookup;
  for (std::size_t i = 0; i < verts.size(); ++i) lookup.emplace(verts[i], static_cast<int>(i));

  std::vector<int> perm(verts.size(), -1);
  std::vector<bool> hit(verts.size(), false);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto it = lookup.find(A.apply(verts[i]));
    if (it == lookup.end()) throw PreconditionError("not a symmetry: image of a vertex is not a vertex");
    if (hit[static_cast<std::size_t>(it->second)])
      throw PreconditionError("not a symmetry: vertex images collide");
    perm[i] = it->second;
    hit[static_cast<std::size_t>(it->second)] = true;
  }
  return perm;
}

}  // namespace

SymmetryAction verify_symmetry(const Polytope& P, const FaceLattice& L, const RatMatrix& A,
                               long p) {
  require_prime(p, "verify_symmetry");
  const std::size_t n = static_cast<std::size_t>(P.ambient_dim());
  if (A.rows() != n || A.cols() != n)
    throw PreconditionError("verify_symmetry: matrix dimension mismatch");

  SymmetryAction act;
  act.matrix = A;
  act.order = p;
  act.vertex_perm = vertex_permutation(P, A);

  RatMatrix id = RatMatrix::identity(n);
  RatMatrix power = id;
  for (long k = 1; k <= p; ++k) {
    power = power * A;
    if (k < p && power == id) throw PreconditionError("order mismatch: order divides " + std::to_string(k));
  }
  if (!(power == id)) throw PreconditionError("order mismatch: A^p is not the identity");

  act.face_perm.resize(L.faces().size());
  for (std::size_t i = 0; i < L.faces().size(); ++i) {
    VertexSet image(L.vertex_count());
    for (int idx : L.faces()[i].verts.indices())
      image.set(static_cast<std::size_t>(act.vertex_perm[idx]));
    auto id_opt = L.find(image);
    assert(id_opt.has_value());  // a vertex bijection induced by a linear map sends faces to faces
    act.face_perm[i] = *id_opt;
  }
  return act;
}

SymmetryAction verify_symmetry(const Polytope& P, const RatMatrix& A, long p) {
  return verify_symmetry(P, face_lattice(P), A, p);
}

bool is_fixed_point_free(const RatMatrix& A) {
  assert(A.rows() == A.cols());
  return (A - RatMatrix::identity(A.rows())).determinant() != 0;
}

std::vector<Rational> char_poly(const RatMatrix& A) {
  assert(A.rows() == A.cols());
  const std::size_t n = A.rows();
  // Faddeev-LeVerrier recurrence.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatMatrix M = A;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += M(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
    if (k < n) {
      RatMatrix shifted = M;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k];
      M = A * shifted;
    }
  }
  return c;
}

std::optional<IntPolynomial> to_int_polynomial(const std::vector<Rational>& coeffs) {
  std::vector<Int> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) {
    if (x.get_den() != 1) return std::nullopt;
    c.push_back(x.get_num());
  }
  return IntPolynomial(std::move(c));
}

std::vector<std::vector<FaceId>> face_orbits(const SymmetryAction& act, const FaceLattice& L) {
  std::vector<std::vector<FaceId>> orbits;
  std::vector<bool> visited(L.faces().size(), false);
  for (std::size_t i = 0; i < L.faces().size(); ++i) {
    if (visited[i] || static_cast<FaceId>(i) == L.full_face()) continue;
    std::vector<FaceId> orbit;
    FaceId cur = static_cast<FaceId>(i);
    while (!visited[static_cast<std::size_t>(cur)]) {
      visited[static_cast<std::size_t>(cur)] = true;
      orbit.push_back(cur);
      cur = act.face_perm[static_cast<std::size_t>(cur)];
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

DivisibilityReport divisibility_report(const std::vector<long>& f, int n, long p) {
  DivisibilityReport rep;
  rep.ok = true;
  if (n % (p - 1) != 0) {
    rep.ok = false;
    rep.failures.push_back("(p-1) does not divide n");
  } else {
    rep.r = n / (p - 1);
  }
  for (int j = 0; j < n; ++j) {
    long fj = f[static_cast<std::size_t>(j) + 1];
    if (fj % p != 0) {
      rep.ok = false;
      rep.failures.push_back("p does not divide f_" + std::to_string(j) + " = " +
                             std::to_string(fj));
    }
  }
  return rep;
}

DivisibilityReport check_divisibility_consequences(const SymmetryAction& act,
                                                   const FaceLattice& L) {
  return divisibility_report(f_vector(L), L.dim(), act.order);
}

namespace {

struct SearchContext {
  const Polytope& P;
  const FaceLattice& L;
  long p;
  std::size_t n;
  std::vector<std::size_t> basis;         // vertex indices, linearly independent
  RatMatrix basis_inverse;                // inverse of the basis column matrix
  std::vector<RatVector> coords;          // coords[v] = basis_inverse * vertex v
  std::vector<std::vector<std::size_t>> ready_at;  // vertices whose support closes at depth d
  std::vector<std::pair<long, long>> invariant;    // per-vertex (facet count, edge count)
  std::map<RatVector, int> vertex_of;
  std::vector<int> images;                // images of basis vertices, by vertex index
  std::vector<SymmetryAction> found;
};

bool matrix_less(const RatMatrix& a, const RatMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    }
  return false;
}

void search(SearchContext& ctx, std::size_t depth) {
  if (depth == ctx.basis.size()) {
    std::vector<RatVector> cols(ctx.n);
    for (std::size_t i = 0; i < ctx.n; ++i)
      cols[i] = ctx.P.vertices()[static_cast<std::size_t>(ctx.images[i])];
    RatMatrix candidate = RatMatrix::from_columns(cols) * ctx.basis_inverse;
    try {
      ctx.found.push_back(verify_symmetry(ctx.P, ctx.L, candidate, ctx.p));
    } catch (const PreconditionError&) {
      // wrong order or not a vertex bijection
    }
    return;
  }

  const std::size_t b = ctx.basis[depth];
  for (std::size_t cand = 0; cand < ctx.P.vertices().size(); ++cand) {
    if (ctx.invariant[cand] != ctx.invariant[b]) continue;
    bool used = false;
    for (std::size_t d = 0; d < depth; ++d)
      if (ctx.images[d] == static_cast<int>(cand)) used = true;
    if (used) continue;
    ctx.images[depth] = static_cast<int>(cand);

    // Images chosen so far must stay linearly independent.
    std::vector<RatVector> chosen;
    for (std::size_t d = 0; d <= depth; ++d)
      chosen.push_back(ctx.P.vertices()[static_cast<std::size_t>(ctx.images[d])]);
    if (linear_rank(chosen) != depth + 1) continue;

    // Every vertex whose basis support is now fully assigned must land on a
    // vertex with the same combinatorial invariant.
    bool consistent = true;
    for (std::size_t v : ctx.ready_at[depth]) {
      RatVector image(ctx.n, Rational(0));
      for (std::size_t i = 0; i <= depth && consistent; ++i) {
        const Rational& c = ctx.coords[v][i];
        if (c == 0) continue;
        image = add(image, scale(c, ctx.P.vertices()[static_cast<std::size_t>(ctx.images[i])]));
      }
      auto it = ctx.vertex_of.find(image);
      if (it == ctx.vertex_of.end() ||
          ctx.invariant[static_cast<std::size_t>(it->second)] != ctx.invariant[v]) {
        consistent = false;
      }
    }
    if (!consistent) continue;

    search(ctx, depth + 1);
  }
  ctx.images[depth] = -1;
}

}  // namespace

std::vector<SymmetryAction> find_prime_symmetries(const Polytope& P, const FaceLattice& L,
                                                  long p) {
  require_prime(p, "find_prime_symmetries");
  if (!P.contains_origin_interior())
    throw PreconditionError("find_prime_symmetries: origin must be interior");
  const std::size_t n = static_cast<std::size_t>(P.ambient_dim());
  const auto& verts = P.vertices();

  SearchContext ctx{P, L, p, n, {}, {}, {}, {}, {}, {}, {}, {}};

  // Linearly independent spanning subset of the vertices.
  std::vector<RatVector> chosen;
  for (std::size_t i = 0; i < verts.size() && ctx.basis.size() < n; ++i) {
    chosen.push_back(verts[i]);
    if (linear_rank(chosen) == chosen.size())
      ctx.basis.push_back(i);
    else
      chosen.pop_back();
  }
  assert(ctx.basis.size() == n);  // full-dimensional with interior origin

  ctx.basis_inverse = *RatMatrix::from_columns(chosen).inverse();
  ctx.coords.resize(verts.size());
  ctx.ready_at.assign(n, {});
  for (std::size_t v = 0; v < verts.size(); ++v) {
    ctx.coords[v] = ctx.basis_inverse.apply(verts[v]);
    std::size_t last = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (ctx.coords[v][i] != 0) last = i;
    ctx.ready_at[last].push_back(v);
  }

  // Combinatorial invariant used for pruning: incident facet and edge counts.
  ctx.invariant.assign(verts.size(), {0, 0});
  for (const auto& f : P.facets())
    for (int idx : f.incident_vertices) ++ctx.invariant[static_cast<std::size_t>(idx)].first;
  for (const auto& face : L.faces()) {
    if (face.dim != 1) continue;
    for (int idx : face.verts.indices()) ++ctx.invariant[static_cast<std::size_t>(idx)].second;
  }

  for (std::size_t i = 0; i < verts.size(); ++i) ctx.vertex_of.emplace(verts[i], static_cast<int>(i));
  ctx.images.assign(n, -1);

  search(ctx, 0);

  std::sort(ctx.found.begin(), ctx.found.end(),
            [](const SymmetryAction& a, const SymmetryAction& b) {
              return matrix_less(a.matrix, b.matrix);
            });
  ctx.found.erase(std::unique(ctx.found.begin(), ctx.found.end(),
                              [](const SymmetryAction& a, const SymmetryAction& b) {
                                return a.matrix == b.matrix;
                              }),
                  ctx.found.end());
  return ctx.found;
}

}  // namespace polytopal
