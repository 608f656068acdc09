#include "polytopal/face_lattice.hpp"

#include <algorithm>
#include <deque>

#include "polytopal/errors.hpp"
#include "polytopal/linalg.hpp"

namespace polytopal {

FaceLattice::FaceLattice(int dim, std::size_t vertex_count, std::vector<Face> faces)
    : dim_(dim), nverts_(vertex_count), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    index_.emplace(faces_[i].verts, static_cast<FaceId>(i));
    if (faces_[i].dim == -1) empty_id_ = static_cast<FaceId>(i);
    if (faces_[i].dim == dim_) full_id_ = static_cast<FaceId>(i);
  }
  if (empty_id_ < 0 || full_id_ < 0)
    throw PreconditionError("FaceLattice: missing empty or full face");
}

std::optional<FaceId> FaceLattice::find(const VertexSet& verts) const {
  auto it = index_.find(verts);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> FaceLattice::validate() const {
  std::vector<std::string> issues;
  std::size_t bottoms = 0, tops = 0;
  for (const auto& f : faces_) {
    if (f.dim == -1) ++bottoms;
    if (f.dim == dim_) ++tops;
  }
  if (bottoms != 1) issues.push_back("expected exactly one empty face");
  if (tops != 1) issues.push_back("expected exactly one full face");

  // Closure under intersection.
  for (std::size_t i = 0; i < faces_.size(); ++i)
    for (std::size_t j = i + 1; j < faces_.size(); ++j)
      if (!find(faces_[i].verts & faces_[j].verts)) {
        issues.push_back("intersection of " + faces_[i].verts.to_string() + " and " +
                         faces_[j].verts.to_string() + " is not a face");
        return issues;
      }

  // Covers: dims of covering pairs differ by exactly one (gradedness).
  auto strictly_below = [&](FaceId a, FaceId b) {
    return faces_[a].verts != faces_[b].verts && faces_[a].verts.is_subset_of(faces_[b].verts);
  };
  const auto count = static_cast<FaceId>(faces_.size());
  for (FaceId a = 0; a < count; ++a) {
    for (FaceId b = 0; b < count; ++b) {
      if (!strictly_below(a, b)) continue;
      bool covered = false;
      for (FaceId c = 0; c < count && !covered; ++c)
        if (c != a && c != b && strictly_below(a, c) && strictly_below(c, b)) covered = true;
      if (!covered && faces_[b].dim != faces_[a].dim + 1)
        issues.push_back("cover " + faces_[a].verts.to_string() + " < " +
                         faces_[b].verts.to_string() + " skips a dimension");
    }
  }

  // Diamond property on rank-2 intervals.
  for (FaceId a = 0; a < count; ++a) {
    for (FaceId b = 0; b < count; ++b) {
      if (!strictly_below(a, b) || faces_[b].dim != faces_[a].dim + 2) continue;
      long middle = 0;
      for (FaceId c = 0; c < count; ++c)
        if (c != a && c != b && strictly_below(a, c) && strictly_below(c, b)) ++middle;
      if (middle != 2)
        issues.push_back("interval " + faces_[a].verts.to_string() + " .. " +
                         faces_[b].verts.to_string() + " has " + std::to_string(middle) +
                         " middle elements");
    }
  }
  return issues;
}

FaceLattice face_lattice(const Polytope& P) {
  const std::size_t m = P.vertices().size();
  const int n = P.ambient_dim();

  std::vector<VertexSet> facet_sets;
  facet_sets.reserve(P.facets().size());
  for (const auto& f : P.facets()) {
    VertexSet s(m);
    for (int idx : f.incident_vertices) s.set(static_cast<std::size_t>(idx));
    facet_sets.push_back(std::move(s));
  }

  VertexSet full(m);
  for (std::size_t i = 0; i < m; ++i) full.set(i);

  // Galois closure: every face is an intersection of facet vertex sets
  // (with the polytope itself adjoined).
  std::unordered_map<VertexSet, int, VertexSetHash> seen;
  std::deque<VertexSet> queue;
  seen.emplace(full, 1);
  queue.push_back(full);
  while (!queue.empty()) {
    VertexSet cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& fs : facet_sets) {
      VertexSet next = cur & fs;
      if (seen.emplace(next, 1).second) queue.push_back(next);
    }
  }
  seen.emplace(VertexSet(m), 1);  // empty face, in case no intersection reached it

  std::vector<Face> faces;
  faces.reserve(seen.size());
  for (const auto& [verts, _] : seen) {
    std::vector<RatVector> pts;
    for (int idx : verts.indices()) pts.push_back(P.vertices()[idx]);
    faces.push_back(Face{verts, affine_dim(pts)});
  }
  return FaceLattice(n, m, std::move(faces));
}

std::vector<long> f_vector(const FaceLattice& L) {
  std::vector<long> f(static_cast<std::size_t>(L.dim()) + 1, 0);
  for (const auto& face : L.faces()) {
    if (face.dim == L.dim()) continue;
    ++f[static_cast<std::size_t>(face.dim + 1)];
  }
  return f;
}

FaceLattice relabeled(const FaceLattice& L, const std::vector<int>& new_index_of) {
  std::vector<Face> faces;
  faces.reserve(L.faces().size());
  for (const auto& face : L.faces()) {
    VertexSet verts(L.vertex_count());
    for (int idx : face.verts.indices()) verts.set(static_cast<std::size_t>(new_index_of[idx]));
    faces.push_back(Face{std::move(verts), face.dim});
  }
  return FaceLattice(L.dim(), L.vertex_count(), std::move(faces));
}

FaceLattice dual_lattice(const FaceLattice& L) {
  const int n = L.dim();
  std::vector<FaceId> facet_ids;
  for (std::size_t i = 0; i < L.faces().size(); ++i)
    if (L.faces()[i].dim == n - 1) facet_ids.push_back(static_cast<FaceId>(i));

  const std::size_t dm = facet_ids.size();
  std::vector<Face> dual_faces;
  dual_faces.reserve(L.faces().size());
  for (const auto& face : L.faces()) {
    VertexSet co(dm);
    for (std::size_t k = 0; k < dm; ++k)
      if (face.verts.is_subset_of(L.face(facet_ids[k]).verts)) co.set(k);
    int dual_dim;
    if (face.dim == -1)
      dual_dim = n;  // empty face becomes the whole dual polytope
    else if (face.dim == n)
      dual_dim = -1;
    else
      dual_dim = n - 1 - face.dim;
    dual_faces.push_back(Face{std::move(co), dual_dim});
  }
  return FaceLattice(n, dm, std::move(dual_faces));
}

}  // namespace polytopal
