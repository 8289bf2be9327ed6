#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pfaffcubic/linalg.hpp"
#include "pfaffcubic/poly.hpp"

namespace pfaffcubic {

/// Dense matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(FieldSpec field, int nvars, std::size_t rows, std::size_t cols);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_skew() const;
  PolyMatrix transpose() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  /// Constant matrix lifted to polynomial entries.
  static PolyMatrix from_constants(const Matrix& m, int nvars);
  /// Entrywise evaluation at a point.
  Matrix evaluate(const std::vector<Scalar>& point) const;
  /// Drops the listed rows and columns (sorted, distinct indices).
  PolyMatrix minor_matrix(const std::vector<std::size_t>& drop_rows, const std::vector<std::size_t>& drop_cols) const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// One row per line, entries separated by ';'.
  std::string to_text() const;

 private:
  FieldSpec field_;
  int nvars_ = 0;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<MultiPoly> data_;
};

/// Skew-symmetric matrix whose entries are linear forms (or zero).
class SkewLinearMatrix {
 public:
  SkewLinearMatrix() = default;
  /// Throws DomainError if m is not square, not skew or has non-linear entries.
  explicit SkewLinearMatrix(PolyMatrix m);
  static SkewLinearMatrix zero(FieldSpec field, int nvars, std::size_t n);

  const PolyMatrix& matrix() const { return m_; }
  operator const PolyMatrix&() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  /// Sets entry (i, j) to l and (j, i) to -l; requires i != j.
  void set(std::size_t i, std::size_t j, const MultiPoly& l);
  friend bool operator==(const SkewLinearMatrix& a, const SkewLinearMatrix& b) { return a.m_ == b.m_; }

 private:
  PolyMatrix m_;
};

/// Parses the matrix text format; entries use the polynomial grammar.
PolyMatrix parse_matrix(std::string_view text, int nvars, const FieldSpec& field);

/// Pfaffian by first-row expansion, memoized on index subsets. Pf of the empty
/// matrix is 1. Throws DomainError on odd or non-skew input.
MultiPoly pfaffian(const PolyMatrix& m);
/// Determinant by Laplace expansion along rows, memoized on column subsets.
MultiPoly determinant(const PolyMatrix& m);
/// p_i = (-1)^(i+1) Pf(N without row/column i), 1-based i; for a 5x5 N these
/// are the Buchsbaum-Eisenbud quadrics.
std::vector<MultiPoly> pfaffian_complements(const SkewLinearMatrix& n);

/// Pfaffian of a constant skew matrix.
Scalar pfaffian(const Matrix& m);

}  // namespace pfaffcubic
