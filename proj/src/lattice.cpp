#include "wallcx/lattice.hpp"

#include "wallcx/normal_form.hpp"

#include <stdexcept>

namespace wallcx {

bool is_unimodular_sequence(const std::vector<std::vector<Int>>& vs) {
  if (vs.empty()) return true;
  const std::size_t g = vs[0].size();
  for (const auto& v : vs) {
    if (v.size() != g) throw std::invalid_argument("is_unimodular_sequence: mixed vector lengths");
  }
  auto factors = snf_invariant_factors(IntMatrix::from_rows(vs));
  if (factors.size() != vs.size()) return false;
  for (const auto& f : factors)
    if (f != 1) return false;
  return true;
}

std::optional<std::vector<std::vector<Int>>> complete_to_basis(
    const std::vector<std::vector<Int>>& vs) {
  if (vs.empty()) throw std::invalid_argument("complete_to_basis: empty sequence");
  if (!is_unimodular_sequence(vs)) return std::nullopt;
  const std::size_t k = vs.size();
  const std::size_t g = vs[0].size();
  SmithDecomposition s = snf(IntMatrix::from_rows(vs));
  IntMatrix rinv = inverse_unimodular(s.r);
  /* m = l^-1 [I_k 0] r^-1, so the last g - k rows of r^-1 extend the span
     of the input rows to all of the ambient lattice. */
  std::vector<std::vector<Int>> extra;
  auto rows = rinv.to_rows();
  for (std::size_t i = k; i < g; ++i) extra.push_back(rows[i]);
  return extra;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_integer: length mismatch");
  SmithDecomposition s = snf(m.with_storage(false));
  std::vector<Int> c = s.l.apply(b);
  const std::size_t rank = s.invariant_factors.size();
  std::vector<Int> y(m.cols(), 0);
  for (std::size_t i = 0; i < rank; ++i) {
    if (c[i] % s.invariant_factors[i] != 0) return std::nullopt;
    y[i] = c[i] / s.invariant_factors[i];
  }
  for (std::size_t i = rank; i < m.rows(); ++i)
    if (c[i] != 0) return std::nullopt;
  return s.r.apply(y);
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m) {
  SmithDecomposition s = snf(m.with_storage(false));
  const std::size_t rank = s.invariant_factors.size();
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = rank; j < m.cols(); ++j) {
    std::vector<Int> v(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) v[i] = s.r.get(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wallcx
