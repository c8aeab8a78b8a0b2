#pragma once

#include "wallcx/seq_poset.hpp"
#include "wallcx/simplicial.hpp"
#include "wallcx/wall.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wallcx {

/* Truncation box for the bounded enumerations. The ambient objects are
   infinite; every builder works inside the sup-norm coefficient box and
   the length and dimension caps, and results are monotone in the bound. */
struct EnumerationBounds {
  coeff_t coeff_bound = 1;      // >= 1, sup norm bound on integer coordinates
  std::size_t max_seq_len = 0;  // 0 picks min(rank, 4)
  std::size_t max_dim = 3;
  std::size_t face_budget = 5000000;  // hard stop, raises ComplexTooLarge

  void validate() const;
  std::size_t seq_cap(std::size_t rank) const;
};

/* An ordered tuple ((x_1, y_1), ..., (x_k, y_k)) of candidate pairs. */
struct Frame {
  std::vector<std::pair<XVector, YVector>> pairs;

  bool operator==(const Frame&) const = default;
  std::size_t length() const { return pairs.size(); }
};

/* Canonical label of one pair; '|' separated so it can serve as a poset
   ground label. */
std::string pair_label(const XVector& x, const YVector& y);

/* All bounded pairs with lambda(x, y) = 1 and alpha(y) = 0, in
   lexicographic order on (x coords, y free coords, y torsion bits).
   q(y, y) = 0 is a model identity here and is asserted, not filtered. */
std::vector<std::pair<XVector, YVector>> enumerate_kpi_vertices(const StandardWallPairing& p,
                                                                const EnumerationBounds& b);

/* Pair complex: vertices from enumerate_kpi_vertices, edges between
   compatible pairs (cross lambda zero both ways, q of the y parts zero),
   and higher faces as cliques up to max_dim. The simplex conditions are
   per-vertex and pairwise, so the flag construction is exact. */
SimplicialComplex build_kpi(const StandardWallPairing& p, const EnumerationBounds& b);

/* Complex of bounded primitive vectors in Z^rank; a k-set is a face iff it
   is a unimodular sequence (k-wise normal form test, not a flag fill). */
SimplicialComplex build_unimodular_complex(std::size_t rank, const EnumerationBounds& b);

/* A sequence poset whose ground elements are pairs: the poset part reuses
   SequencePoset over the pair labels, ground_pairs decodes indices back to
   values. */
struct PairSequencePoset {
  std::size_t rank = 0;
  std::vector<std::pair<XVector, YVector>> ground_pairs;
  SequencePoset poset;

  Frame frame_of(const Seq& s) const;
  std::optional<std::size_t> ground_index(const XVector& x, const YVector& y) const;
  std::optional<Seq> seq_of(const Frame& f) const;
};

/* Reading of the duality condition on sequences with some y = 0 allowed:
   a nonzero y_i is dual to its own x_i and annihilates the other x_j
   (dual_to_own), or annihilates every x_j including its own
   (orthogonal_to_all). The first is the default; the second exists to
   document that the readings genuinely differ. */
enum class DualityReading { dual_to_own, orthogonal_to_all };

/* Ordered tuples of enumerated pairs such that cross lambda values vanish,
   q vanishes on all y pairs, and alpha vanishes (the per-vertex part).
   Closed under sublists and permutations. */
PairSequencePoset build_L(const StandardWallPairing& p, const EnumerationBounds& b);

/* Enlargement of build_L where y entries may be zero: the x parts must
   form a unimodular sequence, every nonzero y obeys the duality reading,
   and q and alpha vanish as before. */
PairSequencePoset build_M(const StandardWallPairing& p, const EnumerationBounds& b,
                          DualityReading reading = DualityReading::dual_to_own);

/* Stage i of the filtration of build_M: stage 0 keeps the sequences with
   at least one nonzero y; stage i adds the all-zero-y sequences of length
   at most i. */
PairSequencePoset filtration(const PairSequencePoset& m, std::size_t i);

/* The retraction onto the nonzero-y sublist. Requires at least one
   nonzero y. */
Frame retraction_h(const Frame& w);

/* Outcome of a two-sided poset comparison under bounded enumeration.
   bound_insufficient counts elements whose image lies outside the
   coefficient box (reported, never treated as failure); failure holds the
   first genuine mismatch. */
struct BijectionReport {
  bool ok = false;
  std::size_t forward_checked = 0;
  std::size_t backward_checked = 0;
  std::size_t bound_insufficient = 0;
  std::string failure;
};

/* Verifies, on bounded enumerations, that splitting off the span of v and
   its dual partner w gives a poset isomorphism between the valid
   sequences compatible with ((v_1, 0), ..., (v_i, 0)) and the tagged
   sequences of the complement pairing: each pair decomposes as
   x = a + b, y = c + e with a, c in the complement and (b, e) recorded as
   a tag over (v, rho(v)); the middle component of y vanishes identically
   and is asserted. Forward and inverse are checked to be mutually inverse
   and order preserving on everything enumerated. */
BijectionReport equivalence1_map(const StandardWallPairing& p, const std::vector<XVector>& v,
                                 const std::vector<YVector>& w_partner,
                                 const EnumerationBounds& b);

/* Verifies, on bounded enumerations, that the elements below vw in
   build_L are exactly the build_L of the complement pairing, under the
   complement coordinate embedding. */
BijectionReport link_identification_check(const StandardWallPairing& p, const Frame& vw,
                                          const EnumerationBounds& b);

/* Neighbor count of every vertex of build_kpi: the link of a vertex is
   nonempty exactly when the count is positive. */
struct VertexLinkReport {
  std::vector<std::pair<std::string, std::size_t>> neighbor_counts;
  bool all_nonempty = false;
};

VertexLinkReport wcm_vertex_link_report(const StandardWallPairing& p,
                                        const EnumerationBounds& b);

}  // namespace wallcx
