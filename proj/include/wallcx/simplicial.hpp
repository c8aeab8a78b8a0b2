#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallcx {

/* Thrown by builders whose enumeration would exceed an explicit face
   budget. Connectivity probes turn it into a resource verdict instead of
   propagating it as an error. */
struct ComplexTooLarge : std::runtime_error {
  explicit ComplexTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/* Finite abstract simplicial complex. Vertices carry labels (used to match
   vertices across differently built complexes); faces are strictly
   ascending vertex-id vectors grouped by dimension. Invariants: downward
   closed, every labelled vertex appears as a 0-face, labels are unique.
   The empty complex has no vertices and no faces. */
struct SimplicialComplex {
  std::vector<std::string> vertex_labels;
  std::vector<std::set<std::vector<std::size_t>>> faces_by_dim;

  bool empty() const { return vertex_labels.empty(); }
  /* Dimension of the complex; -1 when empty. */
  long long dim() const { return static_cast<long long>(faces_by_dim.size()) - 1; }
  std::size_t face_count(std::size_t d) const {
    return d < faces_by_dim.size() ? faces_by_dim[d].size() : 0;
  }
  std::size_t total_faces() const;
  bool has_face(const std::vector<std::size_t>& face) const;

  void insert_face_with_subsets(const std::vector<std::size_t>& face);
  void validate() const;  // throws std::invalid_argument on broken invariants
};

/* Builds the downward closure of the given faces (vertex ids refer to the
   label list; all labels become vertices even if no face mentions them). */
SimplicialComplex complex_from_faces(std::vector<std::string> labels,
                                     const std::vector<std::vector<std::size_t>>& faces);

/* Join: one simplex from each side (or nothing from one side). Labels are
   prefixed "J0:" and "J1:" so the two sides never collide. The empty
   complex is the unit. */
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/* Two isolated points; join with this is suspension. */
SimplicialComplex two_points();

/* suspension(empty) = two_points, matching the join conventions. */
SimplicialComplex suspension(const SimplicialComplex& a);

long long euler_characteristic(const SimplicialComplex& c);

/* Link of a vertex: faces not containing v whose union with v is a face.
   Keeps the original labels (reindexed). */
SimplicialComplex vertex_link(const SimplicialComplex& c, std::size_t v);

/* Boundary of the k-simplex: all proper subsets of k+1 vertices. A model
   of the (k-1)-sphere. k = 0 gives the empty complex. */
SimplicialComplex sphere_boundary(std::size_t k);

/* Full k-simplex including the top face. */
SimplicialComplex full_simplex(std::size_t k);

/* Six-vertex triangulation of the real projective plane. */
SimplicialComplex projective_plane();

}  // namespace wallcx
