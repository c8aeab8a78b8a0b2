#pragma once

#include "wallcx/intmat.hpp"

#include <vector>

namespace wallcx {

/* Row-style Hermite normal form: u * m = h with u unimodular, h in row
   echelon form, pivots positive, entries above each pivot reduced into
   [0, pivot). Deterministic for a given input. */
struct HermiteResult {
  IntMatrix h;
  IntMatrix u;
};
HermiteResult hnf(const IntMatrix& m);

/* Smith normal form: l * m * r = d with l, r unimodular and d diagonal.
   invariant_factors holds the nonzero diagonal entries; each divides the
   next, and the diagonal of d equals the factors padded with zeros. */
struct SmithDecomposition {
  IntMatrix l;
  IntMatrix d;
  IntMatrix r;
  std::vector<Int> invariant_factors;
};
SmithDecomposition snf(const IntMatrix& m);

/* Invariant factors only, skipping transform bookkeeping. Entries of
   absolute value one are peeled off with fill-minimizing pivoting before the
   remaining core goes through the general reduction, which keeps boundary
   matrices fast. */
std::vector<Int> snf_invariant_factors(const IntMatrix& m);

std::size_t integer_rank(const IntMatrix& m);

/* Inverse of a matrix with determinant +-1 (throws otherwise). */
IntMatrix inverse_unimodular(const IntMatrix& m);

}  // namespace wallcx
