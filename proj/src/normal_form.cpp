#include "wallcx/normal_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace wallcx {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

/* g = gcd(a, b) > 0 together with x, y such that x*a + y*b = g. */
std::tuple<Int, Int, Int> xgcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {old_r, old_s, old_t};
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

using Rows = std::vector<std::vector<Int>>;

void sub_scaled_row(std::vector<Int>& dst, const std::vector<Int>& src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

/* Dense Smith reduction worker shared by the transform and factor-only
   entry points. */
struct SmithWorker {
  Rows w;
  std::size_t ncols = 0;  // kept explicitly; w may have no rows
  bool track = false;
  Rows l, r;  // l: row ops, r: col ops (applied to identity)

  SmithWorker(Rows rows, std::size_t cols_in, bool track_transforms)
      : w(std::move(rows)), ncols(cols_in), track(track_transforms) {
    if (track) {
      l = IntMatrix::identity(w.size()).to_rows();
      r = IntMatrix::identity(ncols).to_rows();
    }
  }

  std::size_t rows() const { return w.size(); }
  std::size_t cols() const { return ncols; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(w[a], w[b]);
    if (track) std::swap(l[a], l[b]);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : w) std::swap(row[a], row[b]);
    if (track)
      for (auto& row : r) std::swap(row[a], row[b]);
  }

  void row_sub(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    sub_scaled_row(w[dst], w[src], q);
    if (track) sub_scaled_row(l[dst], l[src], q);
  }

  void col_sub(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (auto& row : w) row[dst] -= q * row[src];
    if (track)
      for (auto& row : r) row[dst] -= q * row[src];
  }

  void negate_row(std::size_t i) {
    for (auto& v : w[i]) v = -v;
    if (track)
      for (auto& v : l[i]) v = -v;
  }

  /* Smallest nonzero absolute value in the trailing submatrix, ties broken
     by (row, col). Returns false when the submatrix is zero. */
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < rows(); ++i) {
      for (std::size_t j = t; j < cols(); ++j) {
        if (w[i][j] == 0) continue;
        Int a = abs_int(w[i][j]);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
          if (best == 1) return true;  // cannot improve; earliest unit wins
        }
      }
    }
    return found;
  }

  std::vector<Int> run() {
    const std::size_t lim = std::min(rows(), cols());
    std::size_t t = 0;
    for (; t < lim; ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = false;
      while (!clean) {
        clean = true;
        for (std::size_t i = t + 1; i < rows(); ++i) {
          if (w[i][t] == 0) continue;
          Int q = w[i][t] / w[t][t];
          row_sub(i, t, q);
          if (w[i][t] != 0) {  // remainder strictly smaller; promote it
            swap_rows(i, t);
            clean = false;
            break;
          }
        }
        if (!clean) continue;
        for (std::size_t j = t + 1; j < cols(); ++j) {
          if (w[t][j] == 0) continue;
          Int q = w[t][j] / w[t][t];
          col_sub(j, t, q);
          if (w[t][j] != 0) {
            swap_cols(j, t);
            clean = false;
            break;
          }
        }
        if (!clean) continue;
        /* Row and column are clear. Pull in any entry the pivot does not
           divide so the divisibility chain holds. */
        bool redo = false;
        for (std::size_t i = t + 1; i < rows() && !redo; ++i) {
          for (std::size_t j = t + 1; j < cols() && !redo; ++j) {
            if (w[i][j] % w[t][t] != 0) {
              row_sub(t, i, Int(-1));  // add row i to row t
              redo = true;
            }
          }
        }
        if (redo) clean = false;
      }
      if (w[t][t] < 0) negate_row(t);
    }
    std::vector<Int> factors;
    for (std::size_t i = 0; i < t; ++i) factors.push_back(w[i][i]);
    return factors;
  }
};

/* Sparse unit-pivot peeling. Removes rows and columns meeting at an entry
   of absolute value one (each contributes an invariant factor of 1) and
   hands the leftover core to the dense worker. */
std::vector<Int> sparse_factor_path(const IntMatrix& m) {
  const std::size_t nrows = m.rows(), ncols = m.cols();
  std::vector<std::map<std::size_t, Int>> rows(nrows);
  std::vector<std::set<std::size_t>> col_rows(ncols);
  m.for_each_nonzero([&](std::size_t i, std::size_t j, const Int& v) {
    rows[i][j] = v;
    col_rows[j].insert(i);
  });
  std::vector<bool> row_dead(nrows, false), col_dead(ncols, false);
  std::size_t ones = 0;

  while (true) {
    /* Markowitz-style scan restricted to unit entries: minimize expected
       fill (row_nnz - 1) * (col_nnz - 1), ties by (row, col). */
    bool found = false;
    std::size_t pi = 0, pj = 0;
    std::size_t best_score = 0;
    for (std::size_t i = 0; i < nrows && !(found && best_score == 0); ++i) {
      if (row_dead[i]) continue;
      for (const auto& [j, v] : rows[i]) {
        if (v != 1 && v != -1) continue;
        std::size_t score = (rows[i].size() - 1) * (col_rows[j].size() - 1);
        if (!found || score < best_score) {
          found = true;
          best_score = score;
          pi = i;
          pj = j;
          if (best_score == 0) break;
        }
      }
    }
    if (!found) break;

    const Int pivot = rows[pi][pj];
    const auto pivot_row = rows[pi];  // copy; the eliminations mutate rows
    const std::vector<std::size_t> col_list(col_rows[pj].begin(), col_rows[pj].end());
    for (std::size_t i : col_list) {
      if (i == pi) continue;
      Int coef = rows[i][pj] * pivot;  // pivot is +-1 so this is the quotient
      for (const auto& [j, pv] : pivot_row) {
        auto it = rows[i].find(j);
        Int nv = (it == rows[i].end() ? Int(0) : it->second) - coef * pv;
        if (nv == 0) {
          if (it != rows[i].end()) {
            rows[i].erase(it);
            col_rows[j].erase(i);
          }
        } else {
          if (it == rows[i].end()) col_rows[j].insert(i);
          rows[i][j] = nv;
        }
      }
    }
    for (const auto& [j, pv] : pivot_row) col_rows[j].erase(pi);
    rows[pi].clear();
    row_dead[pi] = true;
    col_dead[pj] = true;
    ++ones;
  }

  /* Compact the remaining core and finish densely. Two passes: assign
     column slots, then fill. */
  std::map<std::size_t, std::size_t> col_remap;
  Rows core;
  for (std::size_t i = 0; i < nrows; ++i) {
    if (row_dead[i]) continue;
    for (const auto& [j, v] : rows[i]) {
      (void)v;
      if (!col_dead[j]) col_remap.emplace(j, 0);
    }
  }
  std::size_t next = 0;
  for (auto& [j, slot] : col_remap) slot = next++;
  for (std::size_t i = 0; i < nrows; ++i) {
    if (row_dead[i] || rows[i].empty()) continue;
    std::vector<Int> dense_row(col_remap.size(), 0);
    for (const auto& [j, v] : rows[i]) dense_row[col_remap.at(j)] = v;
    core.push_back(std::move(dense_row));
  }

  std::vector<Int> factors(ones, Int(1));
  if (!core.empty() && !col_remap.empty()) {
    SmithWorker worker(std::move(core), col_remap.size(), false);
    for (auto& f : worker.run()) factors.push_back(std::move(f));
  }
  return factors;
}

}  // namespace

HermiteResult hnf(const IntMatrix& m) {
  const std::size_t nrows = m.rows(), ncols = m.cols();
  Rows w = m.to_rows();
  Rows u = IntMatrix::identity(nrows).to_rows();
  std::size_t p = 0;
  for (std::size_t col = 0; col < ncols && p < nrows; ++col) {
    std::size_t nz = nrows;
    for (std::size_t i = p; i < nrows; ++i) {
      if (w[i][col] != 0) {
        nz = i;
        break;
      }
    }
    if (nz == nrows) continue;
    if (nz != p) {
      std::swap(w[p], w[nz]);
      std::swap(u[p], u[nz]);
    }
    for (std::size_t i = p + 1; i < nrows; ++i) {
      if (w[i][col] == 0) continue;
      auto [g, x, y] = xgcd(w[p][col], w[i][col]);
      Int a = w[p][col] / g, b = w[i][col] / g;
      std::vector<Int> wp = w[p], wi = w[i], up = u[p], ui = u[i];
      for (std::size_t j = 0; j < ncols; ++j) {
        w[p][j] = x * wp[j] + y * wi[j];
        w[i][j] = a * wi[j] - b * wp[j];
      }
      for (std::size_t j = 0; j < nrows; ++j) {
        u[p][j] = x * up[j] + y * ui[j];
        u[i][j] = a * ui[j] - b * up[j];
      }
    }
    if (w[p][col] < 0) {
      for (auto& v : w[p]) v = -v;
      for (auto& v : u[p]) v = -v;
    }
    for (std::size_t i = 0; i < p; ++i) {
      Int q = floor_div(w[i][col], w[p][col]);
      sub_scaled_row(w[i], w[p], q);
      sub_scaled_row(u[i], u[p], q);
    }
    ++p;
  }
  HermiteResult out;
  out.h = nrows > 0 ? IntMatrix::from_rows(w) : IntMatrix(0, ncols);
  out.u = nrows > 0 ? IntMatrix::from_rows(u) : IntMatrix::identity(0);
  return out;
}

SmithDecomposition snf(const IntMatrix& m) {
  SmithWorker worker(m.to_rows(), m.cols(), true);
  std::vector<Int> factors = worker.run();
  SmithDecomposition out;
  out.l = m.rows() > 0 ? IntMatrix::from_rows(worker.l) : IntMatrix::identity(0);
  out.d = m.rows() > 0 ? IntMatrix::from_rows(worker.w) : IntMatrix(0, m.cols());
  out.r = m.cols() > 0 ? IntMatrix::from_rows(worker.r) : IntMatrix::identity(0);
  out.invariant_factors = std::move(factors);
  return out;
}

std::vector<Int> snf_invariant_factors(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  return sparse_factor_path(m);
}

std::size_t integer_rank(const IntMatrix& m) { return snf_invariant_factors(m).size(); }

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse_unimodular: not square");
  HermiteResult h = hnf(m);
  if (h.h != IntMatrix::identity(m.rows()))
    throw std::invalid_argument("inverse_unimodular: matrix is not unimodular");
  return h.u;
}

}  // namespace wallcx
