#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <map>
#include <string>
#include <vector>

#include "pfaffcubic/linalg.hpp"
#include "pfaffcubic/linear_change.hpp"
#include "pfaffcubic/poly.hpp"
#include "pfaffcubic/poly_matrix.hpp"
#include "pfaffcubic/rng.hpp"

namespace testsupport {

using namespace pfaffcubic;

inline FieldSpec F(std::uint64_t p) { return FieldSpec::prime(p); }

inline MultiPoly P(const std::string& s, const FieldSpec& f, int n = 5) { return parse_polynomial(s, n, f); }

inline SkewLinearMatrix random_skew_linear(Rng& rng, const FieldSpec& f, int nvars, std::size_t size) {
  SkewLinearMatrix m = SkewLinearMatrix::zero(f, nvars, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) m.set(i, j, rng.form(f, nvars, 1));
  }
  return m;
}

/// Known double-plane matrix: Pf = x0*x3^2 + x1*x4^2 + x2*x3*x4.
inline PolyMatrix reference_double_plane_matrix(const FieldSpec& f) {
  const char* text =
      "0; x3; x4; 0; 0; x2\n"
      "-x3; 0; 0; 0; x4; 0\n"
      "-x4; 0; 0; x3; 0; 0\n"
      "0; 0; -x3; 0; 0; x1\n"
      "0; -x4; 0; 0; 0; x0\n"
      "-x2; 0; 0; -x1; -x0; 0\n";
  return parse_matrix(text, 5, f);
}

/// Map-based polynomial used only by the oracles below, so they do not share
/// arithmetic code with the library.
using NaivePoly = std::map<std::vector<int>, Scalar>;

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r[e] += ca * cb;
    }
  }
  for (auto it = r.begin(); it != r.end();) {
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  }
  return r;
}

inline MultiPoly naive_to_poly(const NaivePoly& a, const FieldSpec& f, int n) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& [e, c] : a) terms.push_back({Monomial::from_exponents(e), c});
  return MultiPoly::from_terms(f, n, terms);
}

/// Term-by-term expansion of f(g^T x).
inline MultiPoly brute_substitute(const MultiPoly& f, const Matrix& g) {
  const int n = f.nvars();
  NaivePoly total;
  for (const auto& t : f.terms()) {
    NaivePoly acc;
    acc[std::vector<int>(n, 0)] = t.c;
    for (int j = 0; j < n; ++j) {
      NaivePoly image;
      for (int i = 0; i < n; ++i) {
        if (g(i, j).is_zero()) continue;
        std::vector<int> e(n, 0);
        e[i] = 1;
        image[e] = g(i, j);
      }
      for (int k = 0; k < t.m.e[j]; ++k) acc = naive_mul(acc, image);
    }
    for (const auto& [e, c] : acc) total[e] += c;
  }
  return naive_to_poly(total, f.field(), n);
}

/// Fraction-free elimination determinant over the polynomial ring.
inline MultiPoly bareiss_poly_det(const PolyMatrix& input) {
  const std::size_t n = input.rows();
  const FieldSpec& f = input.field();
  const int nv = input.nvars();
  if (n == 0) return MultiPoly::constant(f, nv, Scalar::one(f));
  PolyMatrix m = input;
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(f, nv, Scalar::one(f));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k).is_zero()) ++piv;
      if (piv == n) return MultiPoly(f, nv);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = num.exact_divide(prev);
        if (!q) throw std::runtime_error("Bareiss step not exact");
        m(i, j) = *q;
      }
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// a12*a34 - a13*a24 + a14*a23 on a 4x4 skew matrix (1-based in the formula).
inline MultiPoly pf4(const PolyMatrix& a) {
  return a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2);
}

}  // namespace testsupport

namespace testsupport {

/// Rank of the span of {m * g : deg m = d - deg g} inside the degree-d forms.
/// Plain linear algebra, independent of any Groebner basis.
inline std::size_t span_rank(const std::vector<MultiPoly>& gens, int n, int d, const MultiPoly* extra = nullptr) {
  const FieldSpec f = gens.front().field();
  const auto rows = monomials_of_degree(n, d);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    index[std::vector<int>(rows[r].e.begin(), rows[r].e.begin() + n)] = r;
  }
  std::vector<std::vector<Scalar>> cols;
  auto push = [&](const MultiPoly& p) {
    std::vector<Scalar> v(rows.size(), Scalar::zero(f));
    for (const auto& t : p.terms()) v[index.at(std::vector<int>(t.m.e.begin(), t.m.e.begin() + n))] = t.c;
    cols.push_back(std::move(v));
  };
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(n, d - g.degree())) push(g.mul_term(m, Scalar::one(f)));
  }
  if (extra) push(*extra);
  if (cols.empty()) return 0;
  Matrix a(f, cols.size(), rows.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) a(c, r) = cols[c][r];
  }
  return a.rank();
}

/// Membership of a homogeneous form in the ideal, by the same linear algebra.
inline bool in_ideal_oracle(const MultiPoly& p, const std::vector<MultiPoly>& gens, int n) {
  if (p.is_zero()) return true;
  return span_rank(gens, n, p.degree()) == span_rank(gens, n, p.degree(), &p);
}

inline long binom(long a, long b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

/// The six 2x2 minors of [[x0 x1 x2 x3], [x1 x2 x3 x4]]: the rational normal quartic.
inline std::vector<MultiPoly> rnc_quadrics(const FieldSpec& f) {
  std::vector<MultiPoly> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      out.push_back(MultiPoly::variable(f, 5, i) * MultiPoly::variable(f, 5, j + 1) -
                    MultiPoly::variable(f, 5, j) * MultiPoly::variable(f, 5, i + 1));
    }
  }
  return out;
}

inline const char* kSecantCubic = "x0*(x2*x4 - x3^2) + x2*(x1*x3 - x2^2) + x1*(x2*x3 - x1*x4)";

/// Normal forms singular along a curve, with the expected slice type.
struct NormalFormCase {
  const char* name;
  const char* cubic;
  const char* curve_kind;
  int type;        // 1 or 2
  int degree;      // degree of the double curve
  int slice_milnor;// r in "d singularities of type A_r"
};

inline const std::vector<NormalFormCase>& normal_form_cases() {
  static const std::vector<NormalFormCase> cases = {
      {"line, first type", "x3*(x0^2 + x1*x2) + x4*(x1^2 + x0*x2) + x0^3 + x2^3", "Line", 1, 1, 1},
      {"line, second type", "x3*(x0^2 + x1^2) + x4*x0*x1 + x2^3 + x0*x2^2 + x1^3", "Line", 2, 1, 2},
      {"conic, first type", "x3^3 + x4^3 + x0*x4^2 + x1*x3*x4 + x2*(x3^2 + x4^2) + x3*(x1^2 - x0*x2)", "Conic", 1,
       2, 1},
      {"conic, second type", "x4^3 + x3^3 + x3*x4*(x0 + x2) + x3*(x1^2 - x0*x2)", "Conic", 2, 2, 2},
      {"three concurrent lines", "x3^3 + x3^2*(x0 + x4) + x3*(x0*x1 + x1*x2 + 2*x0*x2) + x0*x1*x2",
       "ThreeConcurrentLines", 1, 3, 1},
      {"secant quartic", kSecantCubic, "RationalQuartic", 1, 4, 1},
  };
  return cases;
}

}  // namespace testsupport
