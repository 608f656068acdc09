#pragma once

#include <vector>

#include "polytopal/linalg.hpp"
#include "polytopal/rational.hpp"

namespace polytopal {

/// Facet-defining supporting hyperplane: <normal, x> <= offset on the
/// polytope, with equality exactly on the facet. normal/offset are scaled to
/// a primitive integer vector, so equal facets compare equal componentwise.
struct Facet {
  RatVector normal;
  Rational offset;
  std::vector<int> incident_vertices;  // sorted indices into Polytope::vertices()
};

/// Full-dimensional rational polytope in V-representation. Vertices are the
/// extreme points only, kept in first-seen input order; facets are computed
/// at construction.
class Polytope {
 public:
  int ambient_dim() const { return dim_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Input points discarded as duplicates or non-extreme.
  const std::vector<RatVector>& dropped_points() const { return dropped_; }

  bool contains_origin_interior() const;

 private:
  friend Polytope make_polytope(int dim, std::vector<RatVector> points);
  int dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<RatVector> dropped_;
};

/// Builds the polytope from a point set: drops duplicates and non-extreme
/// points, requires n+1 distinct extreme points spanning R^n. Throws
/// PreconditionError on dimension deficiency.
Polytope make_polytope(int dim, std::vector<RatVector> points);

}  // namespace polytopal
