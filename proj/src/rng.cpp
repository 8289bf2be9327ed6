#include "pfaffcubic/rng.hpp"

namespace pfaffcubic {

Scalar Rng::scalar(const FieldSpec& f, int bound) {
  if (f.is_prime_field()) return Scalar::from_int(f, static_cast<long long>(below(f.characteristic())));
  return Scalar::from_int(f, static_cast<long long>(below(2 * bound + 1)) - bound);
}

Scalar Rng::nonzero_scalar(const FieldSpec& f, int bound) {
  for (;;) {
    Scalar s = scalar(f, bound);
    if (!s.is_zero()) return s;
  }
}

std::vector<Scalar> Rng::vector(const FieldSpec& f, int n, int bound) {
  std::vector<Scalar> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.push_back(scalar(f, bound));
  return v;
}

MultiPoly Rng::form(const FieldSpec& f, int nvars, int degree, int bound) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& m : monomials_of_degree(nvars, degree)) terms.push_back({m, scalar(f, bound)});
  return MultiPoly::from_terms(f, nvars, std::move(terms));
}

Matrix Rng::invertible_matrix(const FieldSpec& f, int n, int bound) {
  for (;;) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = scalar(f, bound);
    }
    if (!m.determinant().is_zero()) return m;
  }
}

}  // namespace pfaffcubic
