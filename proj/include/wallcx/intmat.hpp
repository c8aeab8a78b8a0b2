#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace wallcx {

using Int = boost::multiprecision::cpp_int;

/* Exact integer matrix. Two storage layouts behind one interface: a dense
   row-major buffer for small pairing-sized matrices, and per-row maps for
   boundary matrices where almost everything is zero. Algorithms that care
   (rank, invariant factors) pick a sparse-aware path; everything else goes
   through get/set. No floating point anywhere. */
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, bool sparse_storage = false);

  static IntMatrix dense(std::size_t rows, std::size_t cols);
  static IntMatrix sparse(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_sparse() const { return sparse_; }

  const Int& get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Int v);
  void add_to(std::size_t i, std::size_t j, const Int& v);

  std::size_t nonzero_count() const;
  bool is_zero() const;

  /* Visits nonzero entries in row-major order. */
  void for_each_nonzero(
      const std::function<void(std::size_t, std::size_t, const Int&)>& fn) const;
  void for_each_in_row(
      std::size_t i, const std::function<void(std::size_t, const Int&)>& fn) const;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const;
  bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

  std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x
  std::vector<std::vector<Int>> to_rows() const;
  IntMatrix with_storage(bool sparse_storage) const;
  IntMatrix augmented_with_col(const std::vector<Int>& b) const;

  std::string to_string() const;

private:
  void check_index(std::size_t i, std::size_t j) const;

  std::size_t rows_ = 0, cols_ = 0;
  bool sparse_ = false;
  std::vector<Int> dense_;                            // row-major, when dense
  std::vector<std::map<std::size_t, Int>> row_maps_;  // when sparse
};

/* Determinant by fraction-free (Bareiss) elimination. Square input. */
Int determinant(const IntMatrix& m);

}  // namespace wallcx
