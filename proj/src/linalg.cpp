#include "pfaffcubic/linalg.hpp"

#include "pfaffcubic/errors.hpp"

namespace pfaffcubic {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j] + Scalar::zero(field);
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return std::vector<Scalar>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shapes do not match");
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  }
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw DomainError("vector length does not match matrix");
  std::vector<Scalar> r(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Gauss-Jordan on raw residues; the bulk of the library's linear algebra runs here.
std::vector<std::size_t> rref_mod(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                                  std::uint64_t p) {
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    }
    const std::uint64_t s = inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = a[r * cols + j] * s % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint64_t f = a[i * cols + c];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = (a[i * cols + j] + nf * a[r * cols + j]) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> Matrix::rref() {
  if (field_.is_prime_field()) {
    const std::uint64_t p = field_.characteristic();
    std::vector<std::uint64_t> a(data_.size());
    for (std::size_t k = 0; k < data_.size(); ++k) a[k] = data_[k].is_zero() ? 0 : data_[k].residue();
    auto pivots = rref_mod(a, rows_, cols_, p);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      data_[k] = Scalar::from_int(field_, static_cast<long long>(a[k]));
    }
    return pivots;
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && (*this)(piv, c).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
    }
    const Scalar s = (*this)(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= s;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Scalar f = (*this)(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

std::vector<std::vector<Scalar>> Matrix::kernel() const {
  Matrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols_, Scalar::zero(field_));
    v[f] = Scalar::one(field_);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
  if (b.size() != rows_) throw DomainError("right-hand side has wrong length");
  Matrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i] + Scalar::zero(field_);
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Scalar> x(cols_, Scalar::zero(field_));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, cols_);
  return x;
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  Matrix m = *this;
  Scalar det = Scalar::one(field_);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = c;
    while (piv < rows_ && m(piv, c).is_zero()) ++piv;
    if (piv == rows_) return Scalar::zero(field_);
    if (piv != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar s = m(c, c).inverse();
    for (std::size_t i = c + 1; i < rows_; ++i) {
      const Scalar f = m(i, c) * s;
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Scalar::one(field_);
  }
  auto pivots = aug.rref();
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix inv(field_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

Scalar bareiss_determinant(const Matrix& input) {
  if (input.rows() != input.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  const FieldSpec& f = input.field();
  if (n == 0) return Scalar::one(f);
  Matrix m = input;
  Scalar sign = Scalar::one(f);
  Scalar prev = Scalar::one(f);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k).is_zero()) ++piv;
      if (piv == n) return Scalar::zero(f);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace pfaffcubic
