#pragma once

#include "wallcx/f2.hpp"
#include "wallcx/intmat.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wallcx {

using coeff_t = std::int64_t;

/* Coordinates in the standard free basis x_1..x_g. */
struct XVector {
  std::vector<coeff_t> c;

  bool operator==(const XVector&) const = default;
  auto operator<=>(const XVector&) const = default;
  bool is_zero() const;
  std::string to_string() const;
};

/* Element of Y = Z^g + (Z/2)^g: a free part in the basis y_1..y_g and a
   torsion part in the basis z_1..z_g (entries 0 or 1). */
struct YVector {
  std::vector<coeff_t> free;
  std::vector<std::uint8_t> tor;

  bool operator==(const YVector&) const = default;
  auto operator<=>(const YVector&) const = default;
  bool is_zero() const;
  std::string to_string() const;
};

XVector operator+(const XVector& a, const XVector& b);
XVector operator-(const XVector& a, const XVector& b);
XVector operator*(coeff_t s, const XVector& a);
YVector operator+(const YVector& a, const YVector& b);
YVector operator-(const YVector& a, const YVector& b);
YVector operator*(coeff_t s, const YVector& a);

/* The rank g standard model. Generators x_i of X and y_i, z_i of Y with
     lambda(x_i, y_j) = delta_ij,   lambda(x_i, z_j) = 0,
     q(y_i, z_j) = delta_ij,        q(y_i, y_j) = q(z_i, z_j) = 0,
     alpha(y_i) = alpha(z_i) = 0,
   which forces the closed forms implemented here. alpha obeys
   alpha(a + b) = alpha(a) + alpha(b) + q(a, b), and rho reduces x
   coordinates mod 2 into the torsion part, so q(rho(x), y) = lambda(x, y)
   mod 2 for every x and y. */
class StandardWallPairing {
public:
  explicit StandardWallPairing(std::size_t g) : rank_(g) {}

  std::size_t rank() const { return rank_; }

  Int lambda(const XVector& x, const YVector& y) const;
  int qform(const YVector& a, const YVector& b) const;
  int alpha(const YVector& y) const;
  YVector rho(const XVector& x) const;

  XVector x_gen(std::size_t i) const;
  YVector y_gen(std::size_t i) const;
  YVector z_gen(std::size_t i) const;
  XVector zero_x() const;
  YVector zero_y() const;

private:
  void check_x(const XVector& x) const;
  void check_y(const YVector& y) const;

  std::size_t rank_;
};

/* Exhaustive uniqueness check for rho: among all maps sending generators of
   X into the torsion subgroup, exactly one satisfies
   q(map(x), y) = lambda(x, y) mod 2 on every pair with coordinates in
   [-coeff_bound, coeff_bound], and it is the mod 2 coordinate reduction.
   Enumerates all 2^(g^2) candidates; rank above 3 is rejected as an input
   error to keep the runtime box. */
bool verify_rho_uniqueness(const StandardWallPairing& p, coeff_t coeff_bound = 2);

/* Verifies that z -> q(z, .) identifies the torsion subgroup with the dual
   of the span of the given vectors. Throws when the free parts are
   linearly dependent (no complement could have such a basis); returns
   false when the span is too small, e.g. the index two span of 2*y_1. */
bool torsion_duality(const StandardWallPairing& p, const std::vector<YVector>& yprime_basis);

StandardWallPairing direct_sum(const StandardWallPairing& a, const StandardWallPairing& b);
XVector embed_x_first(const XVector& x, std::size_t left_rank, std::size_t right_rank);
XVector embed_x_second(const XVector& x, std::size_t left_rank, std::size_t right_rank);
YVector embed_y_first(const YVector& y, std::size_t left_rank, std::size_t right_rank);
YVector embed_y_second(const YVector& y, std::size_t left_rank, std::size_t right_rank);

/* A pairing presented by matrices over generators (free generators first,
   torsion generators second in the 2g ordering): lambda values between the
   X generators and the free Y generators, q values between all Y
   generators, and alpha values on the Y generators. */
struct PairingPresentation {
  std::size_t rank = 0;
  IntMatrix lambda_matrix;       // g by g
  F2Matrix q_matrix;             // 2g by 2g, symmetric
  std::vector<std::uint8_t> alpha_gens;  // length 2g

  void validate() const;  // shape and symmetry; throws on violation
};

PairingPresentation presentation_of(const StandardWallPairing& p);

/* Witness that a presentation is isomorphic to the standard model:
   new_x = x_change * old_x generators, new free generators have free parts
   y_free_change over the old free generators plus torsion corrections, and
   new torsion generators are z_change over the old torsion generators. */
struct StandardizeWitness {
  IntMatrix x_change;        // g by g over Z
  IntMatrix y_free_change;   // g by g over Z
  F2Matrix y_tor_correction; // g by g over Z/2
  F2Matrix z_change;         // g by g over Z/2
};

struct StandardizeResult {
  bool ok = false;
  std::string reason;  // set when !ok
  StandardizeWitness witness;
};

StandardizeResult standardize(const PairingPresentation& pres);

/* Applies a witness to a presentation, yielding the presentation in the new
   bases. standardize succeeded exactly when this equals the standard
   presentation of the same rank. */
PairingPresentation apply_witness(const PairingPresentation& pres, const StandardizeWitness& w);

/* Paired sub-lattices: V in X and W in Y with a perfect lambda between
   them. Bases are stored explicitly. */
struct SubspacePair {
  std::vector<XVector> v;
  std::vector<YVector> w;
};

/* Orthogonal complement data: the rank g - k standard pairing carried by
   the returned bases, everything expressed in ambient coordinates.
   x_basis spans { x : lambda(x, w) = 0 for all w in W }; y_basis and
   z_basis together span { y : lambda(v, y) = 0 for all v in V and
   q(y, w) = 0 for all w in W }; w_dual is the W basis re-chosen dual to V. */
struct ComplementResult {
  StandardWallPairing pairing;
  std::vector<XVector> x_basis;
  std::vector<YVector> y_basis;
  std::vector<YVector> z_basis;
  std::vector<YVector> w_dual;
};

ComplementResult complement(const StandardWallPairing& p, const SubspacePair& sub);

/* Presentation induced by explicit bases inside an ambient pairing. */
PairingPresentation presentation_from_bases(const StandardWallPairing& p,
                                            const std::vector<XVector>& xs,
                                            const std::vector<YVector>& ys,
                                            const std::vector<YVector>& zs);

/* Largest k whose homology is already stable at genus g: floor((g-3)/2). */
long long stable_range(long long g);

}  // namespace wallcx
