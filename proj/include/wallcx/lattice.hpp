#pragma once

#include "wallcx/intmat.hpp"

#include <optional>
#include <vector>

namespace wallcx {

/* True when the vectors span a direct summand of rank equal to their count,
   i.e. every Smith invariant factor of the stacked matrix is 1 and the rank
   equals the number of vectors. The empty sequence qualifies. Mixed vector
   lengths are an input error. */
bool is_unimodular_sequence(const std::vector<std::vector<Int>>& vs);

/* Extends a unimodular sequence of k vectors in dimension g to a basis,
   returning the g - k new vectors (deterministic), or nothing when the
   input is not unimodular. */
std::optional<std::vector<std::vector<Int>>> complete_to_basis(
    const std::vector<std::vector<Int>>& vs);

/* A particular integer solution of m * x = b, or nothing when none exists.
   Goes through the Smith transforms. */
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b);

/* Basis of { x : m * x = 0 } spanning it as a direct summand. */
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m);

}  // namespace wallcx
