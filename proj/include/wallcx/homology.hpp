#pragma once

#include "wallcx/intmat.hpp"
#include "wallcx/simplicial.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wallcx {

/* Chain complex over the integers attached to a simplicial complex.
   Faces keep their canonical set order inside each dimension; boundary
   matrices are sparse with the usual alternating signs. Construction
   checks that consecutive boundaries compose to zero. */
class ChainBoundaryStack {
public:
  explicit ChainBoundaryStack(const SimplicialComplex& c);

  long long top_dim() const { return static_cast<long long>(faces_.size()) - 1; }
  std::size_t chain_rank(std::size_t d) const {
    return d < faces_.size() ? faces_[d].size() : 0;
  }
  const std::vector<std::vector<std::size_t>>& faces(std::size_t d) const;
  std::size_t face_index(std::size_t d, const std::vector<std::size_t>& face) const;

  /* boundary(d): C_d -> C_{d-1} for 1 <= d <= top_dim; above the top an
     empty matrix with the right row count. */
  IntMatrix boundary(std::size_t d) const;

  bool is_cycle(std::size_t d, const std::vector<Int>& chain) const;
  bool is_boundary(std::size_t d, const std::vector<Int>& chain) const;

private:
  std::vector<std::vector<std::vector<std::size_t>>> faces_;  // [d][index] = face
  std::vector<IntMatrix> boundaries_;                         // [d-1] = boundary(d)
};

/* Homology of one dimension: free rank plus the invariant factors (> 1)
   of the torsion part. */
struct HomologyGroup {
  long long rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

/* Homology in all dimensions 0..top (or up to max_dim when given).
   When reduced, groups[0] drops one free rank on nonempty complexes and
   minus_one records the reduced group in degree -1 (rank one exactly for
   the empty complex). */
struct HomologyResult {
  bool reduced = false;
  HomologyGroup minus_one;
  std::vector<HomologyGroup> groups;

  const HomologyGroup& at(long long d) const;
  std::string to_string() const;
};

HomologyResult homology(const SimplicialComplex& c, bool reduced = false,
                        long long max_dim = -1);

/* Explicit generating cycles for one homology group. Free generators give
   a basis modulo boundaries and torsion generators carry their orders. */
struct HomologyClassSet {
  std::size_t degree = 0;
  std::vector<std::vector<Int>> free_reps;
  std::vector<std::pair<std::vector<Int>, Int>> torsion_reps;

  std::size_t class_count() const { return free_reps.size() + torsion_reps.size(); }
};

HomologyClassSet homology_generators(const ChainBoundaryStack& s, std::size_t d);

/* Vertex map from labels: position i holds the id in `to` of the vertex
   labelled like vertex i of `from`. Throws when a label is missing. */
std::vector<std::size_t> vertex_map_by_label(const SimplicialComplex& from,
                                             const SimplicialComplex& to);

/* Chain matrices of a simplicial map in dimensions 0..up_to_dim. Faces
   with repeated image vertices map to zero; otherwise the image must be a
   face of the target (throws std::invalid_argument when not). Orientation
   signs come from sorting the image. */
std::vector<IntMatrix> simplicial_chain_maps(const SimplicialComplex& from,
                                             const SimplicialComplex& to,
                                             const std::vector<std::size_t>& vertex_map,
                                             std::size_t up_to_dim);

/* Whether the induced map on degree d homology kills every class. For
   reduced degree zero this asks that all image vertices agree up to
   boundaries. */
bool induced_map_is_zero(const ChainBoundaryStack& from, const ChainBoundaryStack& to,
                         const IntMatrix& map_d, std::size_t d, bool reduced = false);

/* Isomorphism test for the induced map: same rank, same torsion, and
   surjective. For finitely generated groups that forces bijectivity. */
bool induced_map_is_iso(const ChainBoundaryStack& from, const ChainBoundaryStack& to,
                        const IntMatrix& map_d, std::size_t d);

/* Connected components of the 1-skeleton; pairs (component id per vertex,
   component count). */
std::pair<std::vector<std::size_t>, std::size_t> components(const SimplicialComplex& c);

/* A family of complexes indexed by an integer bound, monotone under
   inclusion: every vertex label and face present at bound B must persist
   at every larger bound. */
using ComplexFamily = std::function<SimplicialComplex(std::size_t)>;

enum class Verdict { PASS, FAIL, INCONCLUSIVE };
std::string to_string(Verdict v);

struct ProbeOptions {
  long long target_degree = 0;   // >= -1; -1 checks nonemptiness only
  std::size_t initial_bound = 1;
  std::size_t budget = 0;        // extra bounds probed past the initial one
  std::size_t max_faces = 2000000;  // homology work cap per bound
};

struct DegreeVerdict {
  long long degree = 0;
  Verdict verdict = Verdict::INCONCLUSIVE;
  long long settled_bound = -1;  // bound where the classes died, when PASS
  std::string note;
};

struct BoundSummary {
  std::size_t bound = 0;
  std::size_t vertices = 0;
  std::size_t total_faces = 0;
  bool over_cap = false;
};

struct ProbeResult {
  Verdict verdict = Verdict::INCONCLUSIVE;
  long long base_bound = -1;  // first nonempty probed bound
  std::vector<DegreeVerdict> degrees;
  std::vector<BoundSummary> bounds;

  std::string to_string() const;
};

/* Expanding-bound connectivity check. Classes of the first nonempty
   complex must become trivial under inclusion into larger bounds within
   the budget: reported per degree as PASS (died by some probed bound),
   FAIL (persisted through every probed bound, or the family stayed
   empty), or INCONCLUSIVE (the work cap cut the probe short). This
   certifies the probed classes only; it is evidence about the limit, not
   a proof. */
ProbeResult connectivity_probe(const ComplexFamily& family, const ProbeOptions& opt);

}  // namespace wallcx
