#include "doctest.h"

#include "wallcx/rng.hpp"
#include "wallcx/simplicial.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

using namespace wallcx;

namespace {

SimplicialComplex random_complex(Rng& rng, std::size_t max_verts, std::size_t max_faces) {
  std::size_t n = 1 + rng.index(max_verts);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("r" + std::to_string(i));
  std::vector<std::vector<std::size_t>> faces;
  std::size_t count = rng.index(max_faces + 1);
  for (std::size_t f = 0; f < count; ++f) {
    std::size_t size = 1 + rng.index(std::min<std::size_t>(n, 4));
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < size; ++i) face.push_back(rng.index(n));
    faces.push_back(face);
  }
  return complex_from_faces(labels, faces);
}

}  // namespace

TEST_CASE("downward closure from maximal faces") {
  SimplicialComplex tri = complex_from_faces({"a", "b", "c"}, {{0, 1, 2}});
  CHECK(tri.face_count(0) == 3);
  CHECK(tri.face_count(1) == 3);
  CHECK(tri.face_count(2) == 1);
  CHECK(tri.dim() == 2);
  CHECK(tri.total_faces() == 7);
  CHECK(euler_characteristic(tri) == 1);
  CHECK(tri.has_face({0, 2}));
  CHECK_FALSE(tri.has_face({0, 1, 2, 2}));

  SimplicialComplex lone = complex_from_faces({"a", "b"}, {});
  CHECK(lone.face_count(0) == 2);
  CHECK(lone.dim() == 0);

  SimplicialComplex nothing;
  CHECK(nothing.empty());
  CHECK(nothing.dim() == -1);
  CHECK(euler_characteristic(nothing) == 0);
}

TEST_CASE("validate rejects broken complexes") {
  SimplicialComplex c;
  c.vertex_labels = {"a", "b"};
  c.faces_by_dim.resize(2);
  c.faces_by_dim[0] = {{0}, {1}};
  c.faces_by_dim[1] = {{1, 0}};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c.faces_by_dim[1] = {{0, 1}};
  CHECK_NOTHROW(c.validate());

  SimplicialComplex missing;
  missing.vertex_labels = {"a", "b", "c"};
  missing.faces_by_dim.resize(2);
  missing.faces_by_dim[0] = {{0}, {1}, {2}};
  missing.faces_by_dim[1] = {{0, 1}};
  CHECK_NOTHROW(missing.validate());
  missing.faces_by_dim.resize(3);
  missing.faces_by_dim[2] = {{0, 1, 2}};  // edges 02, 12 absent
  CHECK_THROWS_AS(missing.validate(), std::invalid_argument);

  SimplicialComplex dup;
  dup.vertex_labels = {"a", "a"};
  dup.faces_by_dim.resize(1);
  dup.faces_by_dim[0] = {{0}, {1}};
  CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
}

TEST_CASE("joins build the expected small spaces") {
  SimplicialComplex pt = complex_from_faces({"p"}, {});
  SimplicialComplex edge = join(pt, pt);
  CHECK(edge.face_count(0) == 2);
  CHECK(edge.face_count(1) == 1);
  CHECK(edge.vertex_labels == std::vector<std::string>{"J0:p", "J1:p"});

  SimplicialComplex circle = join(two_points(), two_points());
  CHECK(circle.face_count(0) == 4);
  CHECK(circle.face_count(1) == 4);
  CHECK(circle.dim() == 1);
  CHECK(euler_characteristic(circle) == 0);

  SimplicialComplex unit = join(SimplicialComplex{}, circle);
  CHECK(unit.face_count(0) == 4);
  CHECK(unit.face_count(1) == 4);
}

TEST_CASE("join face counts multiply") {
  Rng rng(555);
  for (int trial = 0; trial < 30; ++trial) {
    SimplicialComplex a = random_complex(rng, 4, 4);
    SimplicialComplex b = random_complex(rng, 4, 4);
    SimplicialComplex j = join(a, b);
    CHECK(j.total_faces() + 1 == (a.total_faces() + 1) * (b.total_faces() + 1));
    j.validate();
  }
}

TEST_CASE("suspensions") {
  SimplicialComplex s0 = suspension(SimplicialComplex{});
  CHECK(s0.face_count(0) == 2);
  CHECK(s0.dim() == 0);

  SimplicialComplex cone = suspension(complex_from_faces({"p"}, {}));
  CHECK(cone.face_count(0) == 3);
  CHECK(cone.face_count(1) == 2);

  SimplicialComplex s1 = suspension(two_points());
  CHECK(s1.face_count(0) == 4);
  CHECK(s1.face_count(1) == 4);
  CHECK(s1.dim() == 1);

  Rng rng(556);
  for (int trial = 0; trial < 30; ++trial) {
    SimplicialComplex a = random_complex(rng, 4, 4);
    CHECK(euler_characteristic(suspension(a)) == 2 - euler_characteristic(a));
  }
}

TEST_CASE("simplex boundaries and full simplices") {
  CHECK(sphere_boundary(0).empty());
  CHECK(sphere_boundary(1).face_count(0) == 2);
  CHECK(sphere_boundary(1).dim() == 0);

  SimplicialComplex s2 = sphere_boundary(2);
  CHECK(s2.face_count(0) == 3);
  CHECK(s2.face_count(1) == 3);
  CHECK(s2.dim() == 1);

  SimplicialComplex s3 = sphere_boundary(3);
  CHECK(s3.face_count(0) == 4);
  CHECK(s3.face_count(1) == 6);
  CHECK(s3.face_count(2) == 4);
  CHECK(euler_characteristic(s3) == 2);

  SimplicialComplex s4 = sphere_boundary(4);
  CHECK(s4.face_count(3) == 5);
  CHECK(euler_characteristic(s4) == 0);

  for (std::size_t k = 0; k <= 4; ++k) {
    CHECK(euler_characteristic(full_simplex(k)) == 1);
    CHECK(full_simplex(k).dim() == static_cast<long long>(k));
  }
}

TEST_CASE("projective plane fixture") {
  SimplicialComplex rp2 = projective_plane();
  CHECK(rp2.face_count(0) == 6);
  CHECK(rp2.face_count(1) == 15);
  CHECK(rp2.face_count(2) == 10);
  CHECK(euler_characteristic(rp2) == 1);

  /* Closed surface: every edge lies in exactly two triangles. */
  for (const auto& e : rp2.faces_by_dim[1]) {
    int incident = 0;
    for (const auto& t : rp2.faces_by_dim[2]) {
      int hit = 0;
      for (std::size_t v : t)
        if (v == e[0] || v == e[1]) ++hit;
      if (hit == 2) ++incident;
    }
    CHECK(incident == 2);
  }
}

TEST_CASE("vertex links") {
  SimplicialComplex s3 = sphere_boundary(3);
  SimplicialComplex lk = vertex_link(s3, 0);
  CHECK(lk.face_count(0) == 3);
  CHECK(lk.face_count(1) == 3);
  CHECK(lk.dim() == 1);

  SimplicialComplex rp2 = projective_plane();
  for (std::size_t v = 0; v < 6; ++v) {
    SimplicialComplex pent = vertex_link(rp2, v);
    CHECK(pent.face_count(0) == 5);
    CHECK(pent.face_count(1) == 5);
    CHECK(euler_characteristic(pent) == 0);
  }

  SimplicialComplex lone = complex_from_faces({"a", "b"}, {});
  CHECK(vertex_link(lone, 0).empty());
  CHECK_THROWS_AS(vertex_link(lone, 5), std::invalid_argument);
}
