#include "doctest.h"

#include "wallcx/json_io.hpp"

#include <cstdint>
#include <limits>
#include <string>

using namespace wallcx;

TEST_CASE("integers round trip through JSON across the int64 boundary") {
  const Int hi = std::numeric_limits<std::int64_t>::max();
  const Int lo = std::numeric_limits<std::int64_t>::min();

  CHECK(int_to_json(Int(0)).is_number_integer());
  CHECK(int_to_json(hi).is_number_integer());
  CHECK(int_to_json(lo).is_number_integer());
  CHECK(int_to_json(hi + 1).is_string());
  CHECK(int_to_json(lo - 1).is_string());

  const Int big = Int(1) << 70;
  CHECK(int_to_json(big).dump() == "\"1180591620717411303424\"");
  const std::vector<Int> samples = {Int(0), Int(1),  Int(-1),   hi,
                                    lo,     big,     Int(-big), Int("123456789012345678901234567890")};
  for (const Int& v : samples) CHECK(int_from_json(int_to_json(v)) == v);

  CHECK(int_from_json(Json(5)) == 5);
  CHECK(int_from_json(Json("5")) == 5);
  CHECK(int_from_json(Json("+5")) == 5);
  CHECK(int_from_json(Json("-0")) == 0);
  CHECK_THROWS_AS(int_from_json(Json(1.5)), JsonFormatError);
  CHECK_THROWS_AS(int_from_json(Json("12x")), JsonFormatError);
  CHECK_THROWS_AS(int_from_json(Json("")), JsonFormatError);
  CHECK_THROWS_AS(int_from_json(Json("-")), JsonFormatError);
  CHECK_THROWS_AS(int_from_json(Json(true)), JsonFormatError);
}

TEST_CASE("presentation serialization round trips and matches the frozen layout") {
  const StandardWallPairing p1(1);
  CHECK(to_json(presentation_of(p1)).dump() ==
        R"({"schema":"wallcx-presentation-v1","rank":1,"lambda":[[1]],)"
        R"("q":[[0,1],[1,0]],"alpha":[0,0]})");

  const StandardWallPairing p3(3);
  const PairingPresentation pres = presentation_of(p3);
  const PairingPresentation back = presentation_from_json(to_json(pres));
  CHECK(back.rank == pres.rank);
  CHECK(back.lambda_matrix == pres.lambda_matrix);
  CHECK(back.q_matrix == pres.q_matrix);
  CHECK(back.alpha_gens == pres.alpha_gens);

  Json j = to_json(pres);
  j["schema"] = "wallcx-presentation-v9";
  CHECK_THROWS_AS(presentation_from_json(j), JsonFormatError);

  j = to_json(pres);
  j["rank"] = 2;  // lambda stays 3 by 3
  CHECK_THROWS_AS(presentation_from_json(j), JsonFormatError);

  j = to_json(presentation_of(p1));
  j["q"][0][1] = 0;  // breaks symmetry, caught by the shape validator
  CHECK_THROWS_AS(presentation_from_json(j), JsonFormatError);

  j = to_json(presentation_of(p1));
  j["alpha"][0] = 2;
  CHECK_THROWS_AS(presentation_from_json(j), JsonFormatError);
}

TEST_CASE("subspace documents carry rank and both coordinate kinds") {
  SubspacePair sub;
  sub.v.push_back(XVector{{1, 0}});
  sub.w.push_back(YVector{{0, 1}, {1, 0}});
  CHECK(to_json(sub, 2).dump() ==
        R"({"schema":"wallcx-subspace-v1","rank":2,"v":[[1,0]],)"
        R"("w":[{"free":[0,1],"tor":[1,0]}]})");

  auto [back, rank] = subspace_from_json(to_json(sub, 2));
  CHECK(rank == 2);
  CHECK(back.v == sub.v);
  CHECK(back.w == sub.w);

  const SubspacePair empty;
  auto [eback, erank] = subspace_from_json(to_json(empty, 3));
  CHECK(erank == 3);
  CHECK(eback.v.empty());
  CHECK(eback.w.empty());

  CHECK_THROWS_AS(to_json(sub, 3), JsonFormatError);  // vectors are rank 2
  Json j = to_json(sub, 2);
  j["v"][0] = Json::array({1, 0, 0});
  CHECK_THROWS_AS(subspace_from_json(j), JsonFormatError);
}

TEST_CASE("complex serialization preserves faces and revalidates closure") {
  CHECK(to_json(two_points()).dump() ==
        R"({"schema":"wallcx-complex-v1","vertices":["S+","S-"],"faces":[[0],[1]]})");

  const SimplicialComplex pp = projective_plane();
  const SimplicialComplex back = complex_from_json(to_json(pp));
  CHECK(back.vertex_labels == pp.vertex_labels);
  CHECK(back.faces_by_dim == pp.faces_by_dim);
  CHECK(homology(back).groups == homology(pp).groups);

  const SimplicialComplex none;
  CHECK(complex_from_json(to_json(none)).empty());

  auto doc = [](const char* text) { return Json::parse(text); };
  // edge without its second endpoint as a 0-face
  CHECK_THROWS_AS(complex_from_json(doc(
                      R"({"schema":"wallcx-complex-v1","vertices":["a","b"],)"
                      R"("faces":[[0],[0,1]]})")),
                  JsonFormatError);
  // face not strictly ascending
  CHECK_THROWS_AS(complex_from_json(doc(
                      R"({"schema":"wallcx-complex-v1","vertices":["a","b"],)"
                      R"("faces":[[0],[1],[1,0]]})")),
                  JsonFormatError);
  // vertex id out of range
  CHECK_THROWS_AS(complex_from_json(doc(
                      R"({"schema":"wallcx-complex-v1","vertices":["a"],"faces":[[3]]})")),
                  JsonFormatError);
}

TEST_CASE("poset serialization round trips") {
  CHECK(to_json(closure({"a", "b"}, {{0, 1}})).dump() ==
        R"({"schema":"wallcx-poset-v1","ground":["a","b"],)"
        R"("elements":[[0],[0,1],[1],[1,0]]})");

  const SequencePoset f = closure({"a", "b", "c"}, {{0, 1, 2}});
  const SequencePoset back = poset_from_json(to_json(f));
  CHECK(back.ground == f.ground);
  CHECK(back.elements == f.elements);

  auto doc = [](const char* text) { return Json::parse(text); };
  // repeated entry inside one sequence
  CHECK_THROWS_AS(poset_from_json(doc(
                      R"({"schema":"wallcx-poset-v1","ground":["a"],"elements":[[0,0]]})")),
                  JsonFormatError);
  // ground index out of range
  CHECK_THROWS_AS(poset_from_json(doc(
                      R"({"schema":"wallcx-poset-v1","ground":["a"],"elements":[[1]]})")),
                  JsonFormatError);
}

TEST_CASE("homology serialization matches the frozen JSON and CSV forms") {
  const HomologyResult pp = homology(projective_plane());
  CHECK(to_json(pp).dump() ==
        R"({"schema":"wallcx-homology-v1","reduced":false,"groups":[)"
        R"({"degree":0,"rank":1,"torsion":[]},)"
        R"({"degree":1,"rank":0,"torsion":[2]},)"
        R"({"degree":2,"rank":0,"torsion":[]}]})");
  CHECK(homology_to_csv(pp) == "degree,rank,torsion\n0,1,\n1,0,2\n2,0,\n");

  const HomologyResult nothing = homology(SimplicialComplex{}, true);
  CHECK(homology_to_csv(nothing) == "degree,rank,torsion\n-1,1,\n");

  for (const HomologyResult& h : {pp, nothing, homology(sphere_boundary(3), true)}) {
    const HomologyResult back = homology_from_json(to_json(h));
    CHECK(back.reduced == h.reduced);
    CHECK(back.minus_one == h.minus_one);
    CHECK(back.groups == h.groups);
  }

  Json j = to_json(pp);
  std::swap(j["groups"][0], j["groups"][1]);
  CHECK_THROWS_AS(homology_from_json(j), JsonFormatError);
}

TEST_CASE("cycle sets serialize as sparse coefficient lists") {
  const SimplicialComplex circle = sphere_boundary(2);
  const ChainBoundaryStack stack(circle);
  const Json j = to_json(homology_generators(stack, 1));
  CHECK(j["schema"] == cycles_schema);
  CHECK(j["degree"] == 1);
  REQUIRE(j["free"].size() == 1);
  CHECK(j["torsion"].empty());
  for (const auto& entry : j["free"][0]) {
    REQUIRE(entry.is_array());
    REQUIRE(entry.size() == 2);
    CHECK(entry[0].is_number_unsigned());
    CHECK(int_from_json(entry[1]) != 0);
  }

  const ChainBoundaryStack pp(projective_plane());
  const Json t = to_json(homology_generators(pp, 1));
  CHECK(t["free"].empty());
  REQUIRE(t["torsion"].size() == 1);
  CHECK(int_from_json(t["torsion"][0]["order"]) == 2);
  CHECK(!t["torsion"][0]["chain"].empty());
}

TEST_CASE("build artifacts stamp their inputs and round trip") {
  const StandardWallPairing p(1);
  EnumerationBounds b;
  b.coeff_bound = 1;
  b.max_seq_len = 2;
  b.face_budget = 12345;

  BuildArtifact a;
  a.kind = "kpi";
  a.g = 1;
  a.bounds = b;
  a.complex = build_kpi(p, b);

  const Json j = to_json(a);
  CHECK(j["builder_version"] == library_version());
  CHECK(j["bound"] == 1);
  CHECK(j["caps"]["max_seq_len"] == 2);
  CHECK(j["caps"]["max_dim"] == 3);
  CHECK(j["caps"]["face_budget"] == 12345);

  const BuildArtifact back = artifact_from_json(j);
  CHECK(back.kind == "kpi");
  CHECK(back.g == 1);
  CHECK(back.bounds.coeff_bound == 1);
  CHECK(back.bounds.max_seq_len == 2);
  CHECK(back.bounds.face_budget == 12345);
  REQUIRE(back.complex.has_value());
  CHECK(!back.poset.has_value());
  CHECK(back.complex->faces_by_dim == a.complex->faces_by_dim);

  BuildArtifact lp;
  lp.kind = "L";
  lp.g = 1;
  lp.bounds = b;
  lp.poset = build_L(p, b).poset;
  const BuildArtifact lback = artifact_from_json(to_json(lp));
  REQUIRE(lback.poset.has_value());
  CHECK(lback.poset->elements == lp.poset->elements);

  Json both = to_json(a);
  both["poset"] = to_json(*lp.poset);
  CHECK_THROWS_AS(artifact_from_json(both), JsonFormatError);
  Json neither = to_json(a);
  neither.erase("complex");
  CHECK_THROWS_AS(artifact_from_json(neither), JsonFormatError);

  BuildArtifact hollow;
  hollow.kind = "kpi";
  CHECK_THROWS_AS(to_json(hollow), JsonFormatError);

  // stable bytes: rebuilding the same artifact dumps identically
  BuildArtifact a2 = a;
  a2.complex = build_kpi(p, b);
  CHECK(to_json(a2).dump(2) == j.dump(2));
}

TEST_CASE("any complex-bearing document loads for homology") {
  const SimplicialComplex pp = projective_plane();
  CHECK(load_complex_any(to_json(pp).dump()).faces_by_dim == pp.faces_by_dim);

  const SequencePoset f = closure({"a", "b", "c"}, {{0, 1, 2}});
  const SimplicialComplex oc = order_complex(f);
  CHECK(load_complex_any(to_json(f).dump()).faces_by_dim == oc.faces_by_dim);

  BuildArtifact a;
  a.kind = "L";
  a.g = 1;
  a.poset = f;
  CHECK(load_complex_any(to_json(a).dump()).faces_by_dim == oc.faces_by_dim);

  CHECK_THROWS_AS(load_complex_any("not json"), JsonFormatError);
  CHECK_THROWS_AS(load_complex_any(to_json(homology(pp)).dump()), JsonFormatError);
  CHECK_THROWS_AS(load_complex_any("[1,2,3]"), JsonFormatError);
}
