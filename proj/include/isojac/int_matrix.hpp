#ifndef ISOJAC_INT_MATRIX_HPP
#define ISOJAC_INT_MATRIX_HPP

#include "isojac/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace isojac {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  IntMatrix transpose() const;

  /// Determinant by fraction-free (Bareiss) elimination; square matrices only.
  Integer determinant() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Block-diagonal sum diag(a, b).
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

}  // namespace isojac

#endif  // ISOJAC_INT_MATRIX_HPP
