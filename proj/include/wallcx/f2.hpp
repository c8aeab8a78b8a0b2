#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace wallcx {

/* Bit matrix over the field with two elements. Row bits live in a single
   64-bit word, which covers every use here (generator counts stay small). */
class F2Matrix {
public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  static F2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  int get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, int v);
  std::uint64_t row_bits(std::size_t i) const;

  F2Matrix operator*(const F2Matrix& rhs) const;
  F2Matrix transposed() const;
  bool operator==(const F2Matrix& rhs) const;
  bool operator!=(const F2Matrix& rhs) const { return !(*this == rhs); }

  std::size_t rank() const;
  bool invertible() const;
  std::optional<F2Matrix> inverse() const;

  /* Solves this * x = b. Free variables are set to zero in a fixed column
     order, so the returned solution is deterministic. */
  std::optional<std::vector<std::uint8_t>> solve(const std::vector<std::uint8_t>& b) const;

  bool is_symmetric() const;
  bool zero_diagonal() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace wallcx
