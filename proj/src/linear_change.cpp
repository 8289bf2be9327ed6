#include "pfaffcubic/linear_change.hpp"

#include "pfaffcubic/errors.hpp"

namespace pfaffcubic {

LinearChange::LinearChange(Matrix g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw DomainError("coordinate change must be square");
  if (g_.determinant().is_zero()) throw DomainError("coordinate change is singular");
}

LinearChange LinearChange::identity(FieldSpec field, int n) { return LinearChange(Matrix::identity(field, n)); }

LinearChange LinearChange::swap(FieldSpec field, int n, int i, int j) {
  Matrix m = Matrix::identity(field, n);
  if (i != j) {
    m(i, i) = Scalar::zero(field);
    m(j, j) = Scalar::zero(field);
    m(i, j) = Scalar::one(field);
    m(j, i) = Scalar::one(field);
  }
  return LinearChange(std::move(m));
}

std::vector<MultiPoly> LinearChange::images() const {
  const int n = nvars();
  std::vector<MultiPoly> out;
  for (int j = 0; j < n; ++j) out.push_back(linear_form(g_.field(), g_.col(j)));
  return out;
}

std::vector<Scalar> LinearChange::to_original(const std::vector<Scalar>& x) const {
  return g_.transpose().apply(x);
}

std::vector<Scalar> LinearChange::from_original(const std::vector<Scalar>& p) const {
  return g_.transpose().inverse().apply(p);
}

MultiPoly apply_change(const MultiPoly& f, const LinearChange& g) {
  if (f.nvars() != g.nvars()) throw DomainError("coordinate change has the wrong size");
  if (!(f.field() == g.matrix().field())) throw DomainError("coordinate change over a different field");
  return f.substitute(g.images());
}

HomogeneousForm apply_change(const HomogeneousForm& f, const LinearChange& g) {
  return HomogeneousForm(apply_change(f.poly(), g), f.degree());
}

}  // namespace pfaffcubic
