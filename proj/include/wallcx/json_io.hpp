#pragma once

#include "wallcx/builders.hpp"
#include "wallcx/homology.hpp"
#include "wallcx/seq_poset.hpp"
#include "wallcx/simplicial.hpp"
#include "wallcx/wall.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>

namespace wallcx {

/* ordered_json keeps insertion order, so documents read top-down (schema
   first) and dumps are byte-stable across runs. */
using Json = nlohmann::ordered_json;

/* Version string compiled into the library; stamped into artifacts. */
const char* library_version();

/* Schema tags. Readers reject any document whose "schema" field does not
   match; bump the suffix when a format changes shape. */
inline constexpr const char* presentation_schema = "wallcx-presentation-v1";
inline constexpr const char* subspace_schema = "wallcx-subspace-v1";
inline constexpr const char* complex_schema = "wallcx-complex-v1";
inline constexpr const char* poset_schema = "wallcx-poset-v1";
inline constexpr const char* homology_schema = "wallcx-homology-v1";
inline constexpr const char* cycles_schema = "wallcx-cycles-v1";
inline constexpr const char* artifact_schema = "wallcx-artifact-v1";

/* Malformed or mismatched documents. Everything below throws this (or a
   derived nlohmann parse error wrapped into it) rather than returning
   partial objects. */
struct JsonFormatError : std::runtime_error {
  explicit JsonFormatError(const std::string& what) : std::runtime_error(what) {}
};

/* Arbitrary-precision integers: emitted as JSON numbers when they fit in
   int64, as decimal strings beyond that. Readers accept both forms. */
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

/* Pairing presentation: rank, row-major integer lambda, q and alpha as
   0/1 arrays. */
Json to_json(const PairingPresentation& p);
PairingPresentation presentation_from_json(const Json& j);

/* Subspace pair inside the rank-g model: x coordinates row-major, each w
   as free coordinates plus torsion bits. The ambient rank travels with
   the document since the vectors alone do not pin it down when empty. */
Json to_json(const SubspacePair& sub, std::size_t rank);
std::pair<SubspacePair, std::size_t> subspace_from_json(const Json& j);

/* Complex: vertex labels as strings, faces as strictly ascending index
   arrays listed dimension by dimension. Readers re-validate closure. */
Json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

/* Sequence poset: ground labels plus index sequences. */
Json to_json(const SequencePoset& f);
SequencePoset poset_from_json(const Json& j);

/* Homology: one record per degree with free rank and invariant factors.
   Reduced results carry the degree -1 group explicitly. */
Json to_json(const HomologyResult& h);
HomologyResult homology_from_json(const Json& j);

/* Same data as CSV with header "degree,rank,torsion"; invariant factors
   joined by ';' inside the torsion cell. */
std::string homology_to_csv(const HomologyResult& h);

/* Generating cycles of one degree as sparse [face index, coefficient]
   lists; torsion generators carry their orders. Write-only: the chain
   data means nothing without the complex it was computed from. */
Json to_json(const HomologyClassSet& s);

/* What `build` writes: the builder inputs (kind, g, bounds) and version
   stamp next to the constructed object. Exactly one of complex/poset is
   set, matching the kind. */
struct BuildArtifact {
  std::string kind;  // "kpi", "unimodular", "L", "M"
  std::size_t g = 0;
  EnumerationBounds bounds;
  std::optional<SimplicialComplex> complex;
  std::optional<SequencePoset> poset;
};

Json to_json(const BuildArtifact& a);
BuildArtifact artifact_from_json(const Json& j);

/* Runs the named builder on the rank-g standard model and wraps the
   result with its stamp. Throws JsonFormatError on an unknown kind. */
BuildArtifact build_artifact(const std::string& kind, std::size_t g, const EnumerationBounds& b);

/* Parses text and dispatches on the "schema" field; accepts plain complex
   and poset documents as well as build artifacts. Used by the homology
   command so it can consume anything `build` emits. Posets are turned
   into their order complexes. */
SimplicialComplex load_complex_any(const std::string& text);

}  // namespace wallcx
