#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polytopal/bitset.hpp"
#include "polytopal/polytope.hpp"

namespace polytopal {

using FaceId = int;

struct Face {
  VertexSet verts;
  int dim;  // -1 for the empty face, n for the whole polytope
};

/// All faces of a polytope as vertex-index sets graded by dimension,
/// ordered by inclusion of vertex sets. Face ids index into faces(), which
/// is sorted by (dim, vertex set) and therefore canonical.
class FaceLattice {
 public:
  FaceLattice(int dim, std::size_t vertex_count, std::vector<Face> faces);

  int dim() const { return dim_; }
  std::size_t vertex_count() const { return nverts_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId id) const { return faces_[id]; }
  FaceId empty_face() const { return empty_id_; }
  FaceId full_face() const { return full_id_; }
  std::optional<FaceId> find(const VertexSet& verts) const;

  bool operator==(const FaceLattice& rhs) const {
    if (dim_ != rhs.dim_ || nverts_ != rhs.nverts_ || faces_.size() != rhs.faces_.size())
      return false;
    for (std::size_t i = 0; i < faces_.size(); ++i)
      if (faces_[i].verts != rhs.faces_[i].verts || faces_[i].dim != rhs.faces_[i].dim)
        return false;
    return true;
  }

  /// Structural invariants: unique bottom/top, gradedness, closure under
  /// intersection, diamond property. Returns human-readable violations.
  std::vector<std::string> validate() const;

 private:
  int dim_;
  std::size_t nverts_;
  std::vector<Face> faces_;
  std::unordered_map<VertexSet, FaceId, VertexSetHash> index_;
  FaceId empty_id_ = -1, full_id_ = -1;
};

/// Faces as the closure of vertex-facet incidence under intersection,
/// graded by affine rank of their vertex coordinates.
FaceLattice face_lattice(const Polytope& P);

/// (f_{-1}, f_0, ..., f_{n-1}); f_{-1} is always 1.
std::vector<long> f_vector(const FaceLattice& L);

/// Inclusion-reversed lattice: vertices of the dual are the facets of L,
/// a proper face of dimension j maps to one of dimension n-1-j.
FaceLattice dual_lattice(const FaceLattice& L);

/// Same lattice with vertex i renamed to new_index_of[i].
FaceLattice relabeled(const FaceLattice& L, const std::vector<int>& new_index_of);

}  // namespace polytopal
