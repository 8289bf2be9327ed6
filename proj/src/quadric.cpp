#include "pfaffcubic/quadric.hpp"

#include "pfaffcubic/errors.hpp"

namespace pfaffcubic {

namespace {

void require_quadric(const MultiPoly& q) {
  if (!q.is_zero() && (!q.is_homogeneous() || q.degree() != 2)) {
    throw DomainError("expected a quadratic form, got " + q.to_string());
  }
}

}  // namespace

Matrix gram_matrix(const MultiPoly& q) {
  require_quadric(q);
  const int n = q.nvars();
  const FieldSpec& f = q.field();
  Matrix g(f, n, n);
  const Scalar half = Scalar::from_int(f, 2).inverse();
  for (const auto& t : q.terms()) {
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < t.m.e[i]; ++k) (a < 0 ? a : b) = i;
    }
    if (a == b) {
      g(a, a) = t.c;
    } else {
      g(a, b) = t.c * half;
      g(b, a) = t.c * half;
    }
  }
  return g;
}

std::size_t quadric_rank(const MultiPoly& q) { return gram_matrix(q).rank(); }

MultiPoly QuadricSplit::reassemble(const FieldSpec& field, int nvars) const {
  MultiPoly s(field, nvars);
  for (const auto& p : products) s += p.first * p.second;
  for (const auto& sq : squares) s += sq.coeff * (sq.form * sq.form);
  return s;
}

std::vector<QuadricSplit::Product> QuadricSplit::as_products() const {
  std::vector<Product> out = products;
  for (const auto& sq : squares) out.push_back({sq.coeff * sq.form, sq.form});
  return out;
}

std::vector<QuadricSplit::Square> diagonalize(const MultiPoly& input) {
  require_quadric(input);
  const int n = input.nvars();
  const FieldSpec& f = input.field();
  const Scalar two = Scalar::from_int(f, 2);
  std::vector<QuadricSplit::Square> out;
  MultiPoly q = input;
  while (!q.is_zero()) {
    int sq = -1;
    for (int i = 0; i < n && sq < 0; ++i) {
      if (!q.coefficient(Monomial::variable(i) * Monomial::variable(i)).is_zero()) sq = i;
    }
    if (sq >= 0) {
      const Scalar a = q.coefficient(Monomial::variable(sq) * Monomial::variable(sq));
      MultiPoly l = (two * a).inverse() * q.partial(sq);
      out.push_back({a, l});
      q -= a * (l * l);
      continue;
    }
    // no squares left: q = b*x_i*x_j + ..., and d_i q * d_j q / b removes both variables
    const Monomial& m = q.leading().m;
    int i = -1, j = -1;
    for (int k = 0; k < n; ++k) {
      if (m.e[k]) (i < 0 ? i : j) = k;
    }
    const Scalar b = q.leading().c;
    MultiPoly l1 = q.partial(i), l2 = q.partial(j);
    const Scalar c = (Scalar::from_int(f, 4) * b).inverse();
    out.push_back({c, l1 + l2});
    out.push_back({-c, l1 - l2});
    q -= b.inverse() * (l1 * l2);
  }
  return out;
}

namespace {

// Bilinear form of sum d_i y_i^2 on coordinate vectors.
Scalar bil(const std::vector<Scalar>& d, const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  Scalar s = d[0] * u[0] * v[0];
  for (std::size_t i = 1; i < d.size(); ++i) s += d[i] * u[i] * v[i];
  return s;
}

// y -> B(y, w) as a linear form in x, given y_i = forms[i].
MultiPoly pair_with(const std::vector<Scalar>& d, const std::vector<MultiPoly>& forms, const std::vector<Scalar>& w) {
  MultiPoly s = Scalar::zero(forms[0].field()) * forms[0];
  for (std::size_t i = 0; i < d.size(); ++i) s += (d[i] * w[i]) * forms[i];
  return s;
}

bool try_pair(const QuadricSplit::Square& a, const QuadricSplit::Square& b, QuadricSplit::Product& out) {
  // a.c*u^2 + b.c*v^2 = a.c*(u - s v)(u + s v) with s^2 = -b.c/a.c
  const Scalar r = -b.coeff / a.coeff;
  if (!is_square(r)) return false;
  const Scalar s = square_root(r);
  out = {a.coeff * (a.form - s * b.form), a.form + s * b.form};
  return true;
}

}  // namespace

QuadricSplit quadric_split(const MultiPoly& q) {
  const FieldSpec& f = q.field();
  QuadricSplit out;
  std::vector<QuadricSplit::Square> sq = diagonalize(q);

  if (f.is_prime_field()) {
    const Scalar two = Scalar::from_int(f, 2);
    while (sq.size() >= 3) {
      std::vector<Scalar> d = {sq[0].coeff, sq[1].coeff, sq[2].coeff};
      std::vector<MultiPoly> y = {sq[0].form, sq[1].form, sq[2].form};
      // isotropic vector (a, b, 1) of d0 a^2 + d1 b^2 + d2
      std::vector<Scalar> v;
      for (long long a = 0; a < static_cast<long long>(f.characteristic()); ++a) {
        const Scalar as = Scalar::from_int(f, a);
        const Scalar rhs = (-d[2] - d[0] * as * as) / d[1];
        if (is_square(rhs)) {
          v = {as, square_root(rhs), Scalar::one(f)};
          break;
        }
      }
      if (v.empty()) throw VerificationFailure("ternary form without isotropic vector over a finite field");
      // w with B(v, w) = 1, then make w isotropic
      std::vector<Scalar> w(3, Scalar::zero(f));
      w[2] = (d[2] * v[2]).inverse();
      const Scalar ww = bil(d, w, w);
      for (int i = 0; i < 3; ++i) w[i] -= ww / two * v[i];
      // u spans the orthogonal complement of span(v, w): solve B(u, v) = B(u, w) = 0
      Matrix cond = Matrix::from_rows(f, {{d[0] * v[0], d[1] * v[1], d[2] * v[2]},
                                          {d[0] * w[0], d[1] * w[1], d[2] * w[2]}});
      auto ker = cond.kernel();
      const std::vector<Scalar>& u = ker.front();
      const Scalar uu = bil(d, u, u);
      out.products.push_back({two * pair_with(d, y, w), pair_with(d, y, v)});
      QuadricSplit::Square rest{uu.inverse(), pair_with(d, y, u)};
      sq.erase(sq.begin(), sq.begin() + 3);
      sq.insert(sq.begin(), rest);
    }
  } else {
    // greedy pairing of squares with rational ratio
    for (std::size_t i = 0; i < sq.size(); ++i) {
      for (std::size_t j = i + 1; j < sq.size(); ++j) {
        QuadricSplit::Product p;
        if (try_pair(sq[i], sq[j], p)) {
          out.products.push_back(p);
          sq.erase(sq.begin() + j);
          sq.erase(sq.begin() + i);
          --i;
          break;
        }
      }
    }
  }
  if (sq.size() == 2) {
    QuadricSplit::Product p;
    if (try_pair(sq[0], sq[1], p)) {
      out.products.push_back(p);
      sq.clear();
    }
  }
  for (auto& p : out.products) {
    if (p.second.is_zero()) continue;
    const Scalar lc = p.second.leading().c;
    p.first = lc * p.first;
    p.second = lc.inverse() * p.second;
  }
  out.squares = std::move(sq);
  return out;
}

}  // namespace pfaffcubic
