#include "wallcx/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace wallcx {

namespace {
const Int kZero = 0;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, bool sparse_storage)
    : rows_(rows), cols_(cols), sparse_(sparse_storage) {
  if (sparse_) {
    row_maps_.resize(rows_);
  } else {
    dense_.assign(rows_ * cols_, kZero);
  }
}

IntMatrix IntMatrix::dense(std::size_t rows, std::size_t cols) {
  return IntMatrix(rows, cols, false);
}

IntMatrix IntMatrix::sparse(std::size_t rows, std::size_t cols) {
  return IntMatrix(rows, cols, true);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_rows: ragged row lengths");
  }
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  return m;
}

void IntMatrix::check_index(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("IntMatrix index out of range");
}

const Int& IntMatrix::get(std::size_t i, std::size_t j) const {
  check_index(i, j);
  if (!sparse_) return dense_[i * cols_ + j];
  auto it = row_maps_[i].find(j);
  return it == row_maps_[i].end() ? kZero : it->second;
}

void IntMatrix::set(std::size_t i, std::size_t j, Int v) {
  check_index(i, j);
  if (!sparse_) {
    dense_[i * cols_ + j] = std::move(v);
    return;
  }
  if (v == 0) {
    row_maps_[i].erase(j);
  } else {
    row_maps_[i][j] = std::move(v);
  }
}

void IntMatrix::add_to(std::size_t i, std::size_t j, const Int& v) {
  if (v == 0) return;
  set(i, j, get(i, j) + v);
}

std::size_t IntMatrix::nonzero_count() const {
  std::size_t n = 0;
  for_each_nonzero([&](std::size_t, std::size_t, const Int&) { ++n; });
  return n;
}

bool IntMatrix::is_zero() const { return nonzero_count() == 0; }

void IntMatrix::for_each_nonzero(
    const std::function<void(std::size_t, std::size_t, const Int&)>& fn) const {
  for (std::size_t i = 0; i < rows_; ++i) for_each_in_row(i, [&](std::size_t j, const Int& v) {
    fn(i, j, v);
  });
}

void IntMatrix::for_each_in_row(
    std::size_t i, const std::function<void(std::size_t, const Int&)>& fn) const {
  if (i >= rows_) throw std::out_of_range("IntMatrix row out of range");
  if (sparse_) {
    for (const auto& [j, v] : row_maps_[i]) fn(j, v);
  } else {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Int& v = dense_[i * cols_ + j];
      if (v != 0) fn(j, v);
    }
  }
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_, sparse_);
  for_each_nonzero([&](std::size_t i, std::size_t j, const Int& v) { t.set(j, i, v); });
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix multiply: shape mismatch");
  IntMatrix out(rows_, rhs.cols_, sparse_ && rhs.sparse_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for_each_in_row(i, [&](std::size_t k, const Int& a) {
      rhs.for_each_in_row(k, [&](std::size_t j, const Int& b) { out.add_to(i, j, a * b); });
    });
  }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j) != rhs.get(i, j)) return false;
  return true;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("IntMatrix apply: length mismatch");
  std::vector<Int> out(rows_, kZero);
  for_each_nonzero([&](std::size_t i, std::size_t j, const Int& v) { out[i] += v * x[j]; });
  return out;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> rows(rows_, std::vector<Int>(cols_, kZero));
  for_each_nonzero([&](std::size_t i, std::size_t j, const Int& v) { rows[i][j] = v; });
  return rows;
}

IntMatrix IntMatrix::with_storage(bool sparse_storage) const {
  if (sparse_storage == sparse_) return *this;
  IntMatrix out(rows_, cols_, sparse_storage);
  for_each_nonzero([&](std::size_t i, std::size_t j, const Int& v) { out.set(i, j, v); });
  return out;
}

IntMatrix IntMatrix::augmented_with_col(const std::vector<Int>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("augmented_with_col: length mismatch");
  IntMatrix out(rows_, cols_ + 1, sparse_);
  for_each_nonzero([&](std::size_t i, std::size_t j, const Int& v) { out.set(i, j, v); });
  for (std::size_t i = 0; i < rows_; ++i) out.set(i, cols_, b[i]);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << get(i, j);
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  auto a = m.to_rows();
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace wallcx
