#include "wallcx/f2.hpp"

#include <stdexcept>

namespace wallcx {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (cols > 64) throw std::invalid_argument("F2Matrix: more than 64 columns unsupported");
  bits_.assign(rows, 0);
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

int F2Matrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("F2Matrix index out of range");
  return static_cast<int>((bits_[i] >> j) & 1u);
}

void F2Matrix::set(std::size_t i, std::size_t j, int v) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("F2Matrix index out of range");
  if (v & 1) {
    bits_[i] |= (std::uint64_t{1} << j);
  } else {
    bits_[i] &= ~(std::uint64_t{1} << j);
  }
}

std::uint64_t F2Matrix::row_bits(std::size_t i) const {
  if (i >= rows_) throw std::out_of_range("F2Matrix row out of range");
  return bits_[i];
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("F2Matrix multiply: shape mismatch");
  F2Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k)
      if ((bits_[i] >> k) & 1u) acc ^= rhs.bits_[k];
    out.bits_[i] = acc;
  }
  return out;
}

F2Matrix F2Matrix::transposed() const {
  F2Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((bits_[i] >> j) & 1u) out.bits_[j] |= (std::uint64_t{1} << i);
  return out;
}

bool F2Matrix::operator==(const F2Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && bits_ == rhs.bits_;
}

std::size_t F2Matrix::rank() const {
  std::vector<std::uint64_t> work = bits_;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t pivot = r;
    while (pivot < rows_ && !((work[pivot] >> col) & 1u)) ++pivot;
    if (pivot == rows_) continue;
    std::swap(work[r], work[pivot]);
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r && ((work[i] >> col) & 1u)) work[i] ^= work[r];
    ++r;
  }
  return r;
}

bool F2Matrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

std::optional<F2Matrix> F2Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::vector<std::uint64_t> work = bits_;
  F2Matrix inv = identity(rows_);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && !((work[pivot] >> col) & 1u)) ++pivot;
    if (pivot == rows_) return std::nullopt;
    std::swap(work[col], work[pivot]);
    std::swap(inv.bits_[col], inv.bits_[pivot]);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != col && ((work[i] >> col) & 1u)) {
        work[i] ^= work[col];
        inv.bits_[i] ^= inv.bits_[col];
      }
    }
  }
  return inv;
}

std::optional<std::vector<std::uint8_t>> F2Matrix::solve(
    const std::vector<std::uint8_t>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("F2Matrix solve: length mismatch");
  std::vector<std::uint64_t> work = bits_;
  std::vector<std::uint8_t> rhs(b);
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t pivot = r;
    while (pivot < rows_ && !((work[pivot] >> col) & 1u)) ++pivot;
    if (pivot == rows_) continue;
    std::swap(work[r], work[pivot]);
    std::swap(rhs[r], rhs[pivot]);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r && ((work[i] >> col) & 1u)) {
        work[i] ^= work[r];
        rhs[i] ^= rhs[r];
      }
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows_; ++i)
    if (rhs[i]) return std::nullopt;
  std::vector<std::uint8_t> x(cols_, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

bool F2Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

bool F2Matrix::zero_diagonal() const {
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i)
    if (get(i, i)) return false;
  return true;
}

}  // namespace wallcx
