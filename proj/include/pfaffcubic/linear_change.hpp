#pragma once

#include "pfaffcubic/linalg.hpp"
#include "pfaffcubic/poly.hpp"

namespace pfaffcubic {

/// Invertible coordinate change g. Acting on forms it substitutes
/// x_j -> sum_i g(i, j) x_i, so apply(f, g*h) = apply(apply(f, h), g).
class LinearChange {
 public:
  /// Throws DomainError when g is singular or not square.
  explicit LinearChange(Matrix g);
  static LinearChange identity(FieldSpec field, int n);
  /// The permutation matrix exchanging x_i and x_j.
  static LinearChange swap(FieldSpec field, int n, int i, int j);

  const Matrix& matrix() const { return g_; }
  int nvars() const { return static_cast<int>(g_.rows()); }
  LinearChange inverse() const { return LinearChange(g_.inverse()); }
  friend LinearChange operator*(const LinearChange& a, const LinearChange& b) {
    return LinearChange(a.g_ * b.g_);
  }

  /// Images of x_0..x_{n-1} under the substitution.
  std::vector<MultiPoly> images() const;
  /// apply(f, g)(x) = f(to_original(x)) with to_original(x) = g^T x.
  std::vector<Scalar> to_original(const std::vector<Scalar>& x) const;
  /// Inverse of to_original.
  std::vector<Scalar> from_original(const std::vector<Scalar>& p) const;

 private:
  Matrix g_;
};

MultiPoly apply_change(const MultiPoly& f, const LinearChange& g);
HomogeneousForm apply_change(const HomogeneousForm& f, const LinearChange& g);

}  // namespace pfaffcubic
