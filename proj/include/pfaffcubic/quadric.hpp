#pragma once

#include <vector>

#include "pfaffcubic/linalg.hpp"
#include "pfaffcubic/poly.hpp"

namespace pfaffcubic {

/// Symmetric Gram matrix of a quadric; off-diagonal entries are half the mixed coefficient.
Matrix gram_matrix(const MultiPoly& q);
std::size_t quadric_rank(const MultiPoly& q);

/// q = sum_k first_k * second_k + sum_j coeff_j * square_j^2.
struct QuadricSplit {
  struct Product {
    MultiPoly first, second;
  };
  struct Square {
    Scalar coeff;
    MultiPoly form;
  };
  std::vector<Product> products;
  std::vector<Square> squares;

  std::size_t summands() const { return products.size() + squares.size(); }
  MultiPoly reassemble(const FieldSpec& field, int nvars) const;
  /// Every summand written as a product of two linear forms.
  std::vector<Product> as_products() const;
};

/// Diagonal form q = sum d_k L_k^2 with independent L_k (symmetric Gauss reduction).
std::vector<QuadricSplit::Square> diagonalize(const MultiPoly& q);

/// Writes q with as few summands as the field allows: over F_p hyperbolic
/// planes are split off with isotropic vectors, leaving at most two squares;
/// over Q only pairs of squares with rational ratio are merged.
QuadricSplit quadric_split(const MultiPoly& q);

}  // namespace pfaffcubic
