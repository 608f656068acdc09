#include "polytopal/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "polytopal/bitset.hpp"
#include "polytopal/errors.hpp"

namespace polytopal {

namespace {

struct HullFacet {
  RatVector normal;  // primitive integer entries
  Rational offset;
  VertexSet incident;  // indices into the processed point list
};

// Scales (a, b) to a primitive integer vector, preserving orientation.
void normalize_hyperplane(RatVector& a, Rational& b) {
  Int lcm = 1;
  for (const auto& x : a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), b.get_den().get_mpz_t());
  Int gcd = 0;
  for (auto& x : a) {
    x *= lcm;
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_num().get_mpz_t());
  }
  b *= lcm;
  mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), b.get_num().get_mpz_t());
  if (gcd > 1) {
    for (auto& x : a) x /= Rational(gcd);
    b /= Rational(gcd);
  }
}

bool hyperplane_less(const HullFacet& f, const HullFacet& g) {
  if (f.offset != g.offset) return f.offset < g.offset;
  for (std::size_t i = 0; i < f.normal.size(); ++i)
    if (f.normal[i] != g.normal[i]) return f.normal[i] < g.normal[i];
  return false;
}

bool hyperplane_equal(const HullFacet& f, const HullFacet& g) {
  return f.offset == g.offset && f.normal == g.normal;
}

// Supporting hyperplane through `span_points` (affinely spanning n-1
// dimensions), oriented so the reference point lies strictly below.
HullFacet hyperplane_through(const std::vector<RatVector>& span_points, const RatVector& ref,
                             std::size_t universe) {
  assert(!span_points.empty());
  const std::size_t n = span_points[0].size();
  std::vector<RatVector> diffs;
  diffs.reserve(span_points.size() - 1);
  for (std::size_t i = 1; i < span_points.size(); ++i)
    diffs.push_back(sub(span_points[i], span_points[0]));
  std::vector<RatVector> kernel = RatMatrix::from_rows(diffs).kernel_basis();
  if (diffs.empty()) {
    // Dimension 1: the hyperplane is a single point.
    assert(n == 1);
    kernel = {RatVector{Rational(1)}};
  }
  assert(kernel.size() == 1);
  RatVector a = kernel[0];
  Rational b = dot(a, span_points[0]);
  Rational at_ref = dot(a, ref);
  assert(at_ref != b);
  if (at_ref > b) {
    for (auto& x : a) x = -x;
    b = -b;
  }
  normalize_hyperplane(a, b);
  return HullFacet{std::move(a), std::move(b), VertexSet(universe)};
}

}  // namespace

bool Polytope::contains_origin_interior() const {
  for (const auto& f : facets_)
    if (f.offset <= 0) return false;
  return true;
}

Polytope make_polytope(int dim, std::vector<RatVector> points) {
  if (dim < 1) throw PreconditionError("make_polytope: dimension must be >= 1");
  const std::size_t n = static_cast<std::size_t>(dim);
  for (const auto& pt : points)
    if (pt.size() != n) throw PreconditionError("make_polytope: point dimension mismatch");

  Polytope P;
  P.dim_ = dim;

  // Exact comparisons require canonical mpq values; normalize caller input.
  for (auto& pt : points)
    for (auto& x : pt) x.canonicalize();

  // Deduplicate, preserving first-seen order.
  std::vector<RatVector> pts;
  for (auto& pt : points) {
    bool dup = false;
    for (const auto& q : pts)
      if (q == pt) {
        dup = true;
        break;
      }
    if (dup)
      P.dropped_.push_back(std::move(pt));
    else
      pts.push_back(std::move(pt));
  }

  if (pts.size() < n + 1)
    throw PreconditionError("make_polytope: fewer than n+1 distinct points");

  // Affinely independent starting simplex.
  std::vector<std::size_t> simplex{0};
  std::vector<RatVector> simplex_pts{pts[0]};
  for (std::size_t i = 1; i < pts.size() && simplex.size() < n + 1; ++i) {
    simplex_pts.push_back(pts[i]);
    if (affine_dim(simplex_pts) == static_cast<int>(simplex.size()))
      simplex.push_back(i);
    else
      simplex_pts.pop_back();
  }
  if (simplex.size() < n + 1) throw PreconditionError("make_polytope: not full-dimensional");

  // Interior reference point: centroid of the starting simplex. The hull
  // only grows, so it stays interior throughout.
  RatVector ref(n, Rational(0));
  for (const auto& sp : simplex_pts) ref = add(ref, sp);
  ref = scale(Rational(1, static_cast<long>(n + 1)), ref);

  const std::size_t m = pts.size();
  std::vector<HullFacet> facets;
  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    std::vector<RatVector> face_pts;
    for (std::size_t i = 0; i < simplex.size(); ++i)
      if (i != skip) face_pts.push_back(pts[simplex[i]]);
    facets.push_back(hyperplane_through(face_pts, ref, m));
  }

  std::vector<bool> processed(m, false);
  for (std::size_t i : simplex) processed[i] = true;

  auto recompute_incidence = [&](std::vector<HullFacet>& fs) {
    for (auto& f : fs) {
      f.incident = VertexSet(m);
      for (std::size_t i = 0; i < m; ++i)
        if (processed[i] && dot(f.normal, pts[i]) == f.offset) f.incident.set(i);
    }
  };
  recompute_incidence(facets);

  for (std::size_t q = 0; q < m; ++q) {
    if (processed[q]) continue;
    processed[q] = true;

    std::vector<std::size_t> visible, invisible, coplanar;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      Rational v = dot(facets[i].normal, pts[q]);
      if (v > facets[i].offset)
        visible.push_back(i);
      else if (v < facets[i].offset)
        invisible.push_back(i);
      else
        coplanar.push_back(i);
    }

    if (visible.empty()) {
      // q already lies in the current hull; record boundary incidence.
      for (std::size_t i : coplanar) facets[i].incident.set(q);
      continue;
    }

    // New facets arise from horizon ridges: (n-2)-dimensional intersections
    // of a visible facet with an invisible one.
    std::vector<HullFacet> next;
    for (std::size_t i : invisible) next.push_back(facets[i]);
    for (std::size_t i : coplanar) {
      next.push_back(facets[i]);
      next.back().incident.set(q);
    }
    for (std::size_t vi : visible) {
      for (std::size_t wi : invisible) {
        VertexSet common = facets[vi].incident & facets[wi].incident;
        if (common.count() + 1 < n) continue;
        std::vector<RatVector> ridge_pts;
        for (int idx : common.indices()) ridge_pts.push_back(pts[idx]);
        if (affine_dim(ridge_pts) != static_cast<int>(n) - 2) continue;
        ridge_pts.push_back(pts[q]);
        next.push_back(hyperplane_through(ridge_pts, ref, m));
      }
    }

    std::sort(next.begin(), next.end(), hyperplane_less);
    next.erase(std::unique(next.begin(), next.end(), hyperplane_equal), next.end());
    facets = std::move(next);
    recompute_incidence(facets);
  }

  // Extreme points: on the boundary, with incident facet normals of full
  // rank. Everything else was an interior or relatively-interior input.
  std::vector<long> new_index(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<RatVector> normals;
    for (const auto& f : facets) {
      Rational v = dot(f.normal, pts[i]);
      assert(v <= f.offset);
      if (v == f.offset) normals.push_back(f.normal);
    }
    if (!normals.empty() && linear_rank(normals) == n) {
      new_index[i] = static_cast<long>(P.vertices_.size());
      P.vertices_.push_back(pts[i]);
    } else {
      P.dropped_.push_back(pts[i]);
    }
  }

  for (auto& f : facets) {
    Facet out;
    out.normal = std::move(f.normal);
    out.offset = std::move(f.offset);
    for (int idx : f.incident.indices())
      if (new_index[idx] >= 0) out.incident_vertices.push_back(static_cast<int>(new_index[idx]));
    std::sort(out.incident_vertices.begin(), out.incident_vertices.end());
    assert(out.incident_vertices.size() >= n);
    P.facets_.push_back(std::move(out));
  }
  std::sort(P.facets_.begin(), P.facets_.end(),
            [](const Facet& a, const Facet& b) { return a.incident_vertices < b.incident_vertices; });

  assert(P.vertices_.size() >= n + 1);
  return P;
}

}  // namespace polytopal
