#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "superds/rational.hpp"

namespace superds {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination after clearing denominators row by row.
std::size_t rank(const Matrix& m);

/// Reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(Matrix& m);

/// Basis of the right null space {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Indices of a maximal linearly independent subset of the columns (leftmost choice).
std::vector<std::size_t> independent_columns(const Matrix& m);

/// Inertia (n_plus, n_minus, n_zero) of a symmetric matrix by exact congruence diagonalisation.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Inertia inertia(const Matrix& symmetric);

}  // namespace superds
