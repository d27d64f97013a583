#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "precy/scalar.hpp"

namespace precy {

/// Dense row-major matrix over the rationals. Small sizes only (Gram
/// matrices, representation matrices, linear constraint systems).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);

std::size_t rank(Matrix m);

/// Exact inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of the right null space {x : m x = 0}, one vector per free column
/// of the reduced row echelon form.
std::vector<Vec> null_space(Matrix m);

/// Block-diagonal assembly.
Matrix block_diagonal(const std::vector<Matrix>& blocks);

}  // namespace precy
