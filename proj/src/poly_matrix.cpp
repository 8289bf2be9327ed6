#include "pfaffcubic/poly_matrix.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "pfaffcubic/errors.hpp"

namespace pfaffcubic {

PolyMatrix::PolyMatrix(FieldSpec field, int nvars, std::size_t rows, std::size_t cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols), data_(rows * cols, MultiPoly(field, nvars)) {}

bool PolyMatrix::is_skew() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) == -(*this)(j, i))) return false;
    }
  }
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(field_, nvars_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shapes do not match");
  PolyMatrix r(a.field_, a.nvars_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      MultiPoly s(a.field_, a.nvars_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        s += a(i, k) * b(k, j);
      }
      r(i, j) = std::move(s);
    }
  }
  return r;
}

PolyMatrix PolyMatrix::from_constants(const Matrix& m, int nvars) {
  PolyMatrix r(m.field(), nvars, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = MultiPoly::constant(m.field(), nvars, m(i, j));
  }
  return r;
}

Matrix PolyMatrix::evaluate(const std::vector<Scalar>& point) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).evaluate(point);
  }
  return r;
}

PolyMatrix PolyMatrix::minor_matrix(const std::vector<std::size_t>& drop_rows,
                                    const std::vector<std::size_t>& drop_cols) const {
  std::vector<std::size_t> keep_r, keep_c;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (std::find(drop_rows.begin(), drop_rows.end(), i) == drop_rows.end()) keep_r.push_back(i);
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    if (std::find(drop_cols.begin(), drop_cols.end(), j) == drop_cols.end()) keep_c.push_back(j);
  }
  PolyMatrix r(field_, nvars_, keep_r.size(), keep_c.size());
  for (std::size_t i = 0; i < keep_r.size(); ++i) {
    for (std::size_t j = 0; j < keep_c.size(); ++j) r(i, j) = (*this)(keep_r[i], keep_c[j]);
  }
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string PolyMatrix::to_text() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += "; ";
      s += (*this)(i, j).to_string();
    }
    s += "\n";
  }
  return s;
}

// ---------------------------------------------------------------------------

SkewLinearMatrix::SkewLinearMatrix(PolyMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DomainError("skew matrix must be square");
  if (!m_.is_skew()) throw DomainError("matrix is not skew-symmetric");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      const auto& e = m_(i, j);
      if (!e.is_zero() && (!e.is_homogeneous() || e.degree() != 1)) {
        throw DomainError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") is not a linear form");
      }
    }
  }
}

SkewLinearMatrix SkewLinearMatrix::zero(FieldSpec field, int nvars, std::size_t n) {
  return SkewLinearMatrix(PolyMatrix(field, nvars, n, n));
}

void SkewLinearMatrix::set(std::size_t i, std::size_t j, const MultiPoly& l) {
  if (i == j) throw DomainError("diagonal of a skew matrix is zero");
  if (!l.is_zero() && (!l.is_homogeneous() || l.degree() != 1)) {
    throw DomainError("skew matrix entries must be linear forms");
  }
  m_(i, j) = l;
  m_(j, i) = -l;
}

// ---------------------------------------------------------------------------

PolyMatrix parse_matrix(std::string_view text, int nvars, const FieldSpec& field) {
  std::vector<std::vector<MultiPoly>> rows;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      std::vector<MultiPoly> row;
      std::size_t start = 0;
      for (;;) {
        std::size_t sep = line.find(';', start);
        std::string_view cell = line.substr(start, sep == std::string_view::npos ? line.size() - start : sep - start);
        try {
          row.push_back(parse_polynomial(cell, nvars, field));
        } catch (const ParseError& e) {
          throw ParseError(line_start + start + e.position(),
                           "row " + std::to_string(rows.size() + 1) + ": " + e.what());
        }
        if (sep == std::string_view::npos) break;
        start = sep + 1;
      }
      rows.push_back(std::move(row));
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (rows.empty()) throw ParseError(0, "empty matrix");
  PolyMatrix m(field, nvars, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) {
      throw ParseError(0, "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(m.cols()));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// ---------------------------------------------------------------------------

namespace {

template <class T, class Entry, class Mul, class One, class Zero>
T pfaffian_memo(std::uint32_t subset, Entry entry, Mul mul, One one, Zero zero,
                std::unordered_map<std::uint32_t, T>& memo) {
  if (subset == 0) return one();
  if (auto it = memo.find(subset); it != memo.end()) return it->second;
  const int first = __builtin_ctz(subset);
  const std::uint32_t rest = subset & ~(1u << first);
  T sum = zero();
  int sign = 1;
  for (std::uint32_t r = rest; r; r &= r - 1) {
    const int j = __builtin_ctz(r);
    const auto& a = entry(first, j);
    if (!a.is_zero()) {
      T sub = pfaffian_memo<T>(rest & ~(1u << j), entry, mul, one, zero, memo);
      if (!sub.is_zero()) {
        if (sign > 0) {
          sum += mul(a, sub);
        } else {
          sum -= mul(a, sub);
        }
      }
    }
    sign = -sign;
  }
  memo.emplace(subset, sum);
  return sum;
}

void require_even_skew(std::size_t rows, std::size_t cols, bool skew) {
  if (rows != cols) throw DomainError("Pfaffian needs a square matrix");
  if (rows % 2) throw DomainError("Pfaffian of an odd-size matrix (" + std::to_string(rows) + ")");
  if (!skew) throw DomainError("Pfaffian needs a skew-symmetric matrix");
  if (rows > 30) throw DomainError("matrix too large for the Pfaffian expansion");
}

}  // namespace

MultiPoly pfaffian(const PolyMatrix& m) {
  require_even_skew(m.rows(), m.cols(), m.is_skew());
  std::unordered_map<std::uint32_t, MultiPoly> memo;
  const std::uint32_t all = m.rows() == 0 ? 0u : ((1u << m.rows()) - 1);
  return pfaffian_memo<MultiPoly>(
      all, [&](int i, int j) -> const MultiPoly& { return m(i, j); },
      [](const MultiPoly& a, const MultiPoly& b) { return a * b; },
      [&] { return MultiPoly::constant(m.field(), m.nvars(), Scalar::one(m.field())); },
      [&] { return MultiPoly(m.field(), m.nvars()); }, memo);
}

Scalar pfaffian(const Matrix& m) {
  bool skew = m.rows() == m.cols();
  for (std::size_t i = 0; skew && i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!(m(i, j) == -m(j, i))) {
        skew = false;
        break;
      }
    }
  }
  require_even_skew(m.rows(), m.cols(), skew);
  std::unordered_map<std::uint32_t, Scalar> memo;
  const std::uint32_t all = m.rows() == 0 ? 0u : ((1u << m.rows()) - 1);
  return pfaffian_memo<Scalar>(
      all, [&](int i, int j) -> const Scalar& { return m(i, j); },
      [](const Scalar& a, const Scalar& b) { return a * b; }, [&] { return Scalar::one(m.field()); },
      [&] { return Scalar::zero(m.field()); }, memo);
}

MultiPoly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 20) throw DomainError("matrix too large for the Laplace expansion");
  // memo[cols] = det of the minor on rows [n - |cols|, n) and the given columns
  std::unordered_map<std::uint32_t, MultiPoly> memo;
  std::function<MultiPoly(std::uint32_t, std::size_t)> rec = [&](std::uint32_t cols, std::size_t row) -> MultiPoly {
    if (cols == 0) return MultiPoly::constant(m.field(), m.nvars(), Scalar::one(m.field()));
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    MultiPoly sum(m.field(), m.nvars());
    int sign = 1;
    for (std::uint32_t r = cols; r; r &= r - 1) {
      const int j = __builtin_ctz(r);
      if (!m(row, j).is_zero()) {
        MultiPoly sub = rec(cols & ~(1u << j), row + 1);
        if (!sub.is_zero()) {
          if (sign > 0) {
            sum += m(row, j) * sub;
          } else {
            sum -= m(row, j) * sub;
          }
        }
      }
      sign = -sign;
    }
    memo.emplace(cols, sum);
    return sum;
  };
  return rec(n == 0 ? 0u : ((1u << n) - 1), 0);
}

std::vector<MultiPoly> pfaffian_complements(const SkewLinearMatrix& n) {
  const std::size_t k = n.size();
  if (k % 2 == 0) throw DomainError("complementary Pfaffians need an odd-size matrix");
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < k; ++i) {
    MultiPoly p = pfaffian(n.matrix().minor_matrix({i}, {i}));
    out.push_back(i % 2 == 0 ? p : -p);
  }
  return out;
}

}  // namespace pfaffcubic
