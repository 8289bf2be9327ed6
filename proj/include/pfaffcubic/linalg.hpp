#pragma once

#include <optional>
#include <vector>

#include "pfaffcubic/field.hpp"

namespace pfaffcubic {

/// Dense row-major matrix of field scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<Scalar> row(std::size_t i) const;
  std::vector<Scalar> col(std::size_t j) const;

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of {v : A v = 0}, one vector per free column, in column order.
  std::vector<std::vector<Scalar>> kernel() const;
  /// A solution of A x = b with free variables set to zero, if any exists.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
  Scalar determinant() const;
  /// Throws DomainError when singular.
  Matrix inverse() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Fraction-free (Bareiss) determinant; an independent oracle for determinant().
Scalar bareiss_determinant(const Matrix& m);

}  // namespace pfaffcubic
