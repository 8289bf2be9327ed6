#include "pfaffcubic/points.hpp"

#include <algorithm>

#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/linear_change.hpp"
#include "pfaffcubic/univariate.hpp"

namespace pfaffcubic {

namespace {

bool involves(const MultiPoly& f, int v) {
  for (const auto& t : f.terms()) {
    if (t.m.e[v]) return true;
  }
  return false;
}

bool only_in(const MultiPoly& f, int v) {
  for (const auto& t : f.terms()) {
    if (t.m.deg != t.m.e[v]) return false;
  }
  return true;
}

UniPoly to_uni(const MultiPoly& f, int v) {
  std::vector<Scalar> c(f.degree() + 1, Scalar::zero(f.field()));
  for (const auto& t : f.terms()) c[t.m.e[v]] = t.c;
  return UniPoly(f.field(), std::move(c));
}

MultiPoly fix_variable(const MultiPoly& f, int v, const Scalar& value) {
  std::vector<MultiPoly> images;
  for (int i = 0; i < f.nvars(); ++i) {
    images.push_back(i == v ? MultiPoly::constant(f.field(), f.nvars(), value)
                            : MultiPoly::variable(f.field(), f.nvars(), i));
  }
  return f.substitute(images);
}

std::vector<MultiPoly> nonzero_only(std::vector<MultiPoly> v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](const MultiPoly& p) { return p.is_zero(); }), v.end());
  return v;
}

// Solutions of the affine system in the variables listed in free; all other
// variables have already been fixed.
void solve_affine(const std::vector<MultiPoly>& polys, std::vector<int> free, std::vector<Scalar>& current,
                  std::vector<Point>& out) {
  const auto gens = nonzero_only(polys);
  if (free.empty()) {
    if (gens.empty()) out.push_back(current);
    return;
  }
  if (gens.empty()) throw DomainError("zero set is not finite");
  const auto gb = groebner_basis(gens, MonomialOrder::lex());
  if (gb.size() == 1 && gb.front().degree() == 0) return;
  const int v = free.back();
  const MultiPoly* elim = nullptr;
  for (const auto& g : gb) {
    if (only_in(g, v) && g.degree() > 0) {
      elim = &g;
      break;
    }
  }
  if (!elim) throw DomainError("zero set is not finite");
  free.pop_back();
  for (const auto& r : roots(to_uni(*elim, v))) {
    std::vector<MultiPoly> next;
    for (const auto& g : gb) next.push_back(involves(g, v) ? fix_variable(g, v, r) : g);
    current[v] = r;
    solve_affine(next, free, current, out);
  }
}

}  // namespace

bool is_zero_vector(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Point normalize_point(Point p) {
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    const Scalar inv = c.inverse();
    for (auto& x : p) x *= inv;
    return p;
  }
  throw DomainError("the zero vector is not a projective point");
}

std::vector<MultiPoly> point_ideal(const FieldSpec& field, const Point& p) {
  return span_ideal(field, static_cast<int>(p.size()), {p});
}

std::vector<MultiPoly> span_ideal(const FieldSpec& field, int nvars, const std::vector<Point>& points) {
  Matrix a(field, points.size(), nvars);
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (int c = 0; c < nvars; ++c) a(r, c) = points[r][c];
  }
  std::vector<MultiPoly> out;
  for (const auto& k : a.kernel()) out.push_back(linear_form(field, k));
  return out;
}

std::vector<MultiPoly> forms_vanishing_at(const FieldSpec& field, int nvars, const std::vector<Point>& points,
                                          int degree) {
  const auto monos = monomials_of_degree(nvars, degree);
  Matrix a(field, points.size(), monos.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t c = 0; c < monos.size(); ++c) {
      a(r, c) = MultiPoly::monomial(field, nvars, monos[c], Scalar::one(field)).evaluate(points[r]);
    }
  }
  std::vector<MultiPoly> out;
  for (const auto& k : a.kernel()) {
    std::vector<MultiPoly::Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c) terms.push_back({monos[c], k[c]});
    out.push_back(MultiPoly::from_terms(field, nvars, std::move(terms)));
  }
  return out;
}

std::vector<Point> rational_points(const GradedIdeal& ideal) {
  const FieldSpec& f = ideal.field();
  const int n = ideal.nvars();
  std::vector<Point> out;
  if (ideal.is_zero()) throw DomainError("zero set is not finite");
  for (int chart = 0; chart < n; ++chart) {
    // x_j = 0 for j < chart, x_chart = 1
    std::vector<MultiPoly> images;
    for (int i = 0; i < n; ++i) {
      if (i < chart) {
        images.push_back(MultiPoly(f, n));
      } else if (i == chart) {
        images.push_back(MultiPoly::constant(f, n, Scalar::one(f)));
      } else {
        images.push_back(MultiPoly::variable(f, n, i));
      }
    }
    std::vector<MultiPoly> polys;
    for (const auto& g : ideal.gb()) polys.push_back(g.substitute(images));
    std::vector<int> free;
    for (int i = chart + 1; i < n; ++i) free.push_back(i);
    std::vector<Scalar> current(n, Scalar::zero(f));
    current[chart] = Scalar::one(f);
    solve_affine(polys, free, current, out);
  }
  return out;
}

long count_points(const GradedIdeal& ideal, Rng& rng) {
  const FieldSpec& f = ideal.field();
  const int n = ideal.nvars();
  if (ideal.is_unit()) return 0;
  long best = -1;
  for (int attempt = 0, good = 0; attempt < 12 && good < 2; ++attempt) {
    const LinearChange g(rng.invertible_matrix(f, n, 1000));
    std::vector<MultiPoly> moved;
    for (const auto& p : ideal.gb()) moved.push_back(apply_change(p, g));
    GradedIdeal mi(f, n, moved);
    // no points at infinity in the chart x_0 = 1
    if (!saturate(mi.add({MultiPoly::variable(f, n, 0)})).is_unit()) continue;
    std::vector<MultiPoly> images;
    for (int i = 0; i < n; ++i) {
      images.push_back(i == 0 ? MultiPoly::constant(f, n, Scalar::one(f)) : MultiPoly::variable(f, n, i));
    }
    std::vector<MultiPoly> polys;
    for (const auto& p : mi.gb()) polys.push_back(p.substitute(images));
    const auto gb = groebner_basis(nonzero_only(polys), MonomialOrder::lex());
    long count = -1;
    for (const auto& p : gb) {
      if (p.degree() == 0) count = 0;
      if (only_in(p, n - 1) && p.degree() > 0) count = radical(to_uni(p, n - 1)).degree();
    }
    if (count < 0) throw DomainError("zero set is not finite");
    best = std::max(best, count);
    ++good;
  }
  if (best < 0) throw Undetermined("could not find a generic projection for point counting");
  return best;
}

std::vector<Point> hyperplane_basis(const MultiPoly& h) {
  const auto c = linear_coefficients(h);
  Matrix a(h.field(), 1, c.size());
  for (std::size_t i = 0; i < c.size(); ++i) a(0, i) = c[i];
  return a.kernel();
}

MultiPoly restrict_to_span(const MultiPoly& f, const std::vector<Point>& basis) {
  const FieldSpec& field = f.field();
  const int m = static_cast<int>(basis.size());
  std::vector<MultiPoly> images;
  for (int j = 0; j < f.nvars(); ++j) {
    std::vector<Scalar> c;
    for (int k = 0; k < m; ++k) c.push_back(basis[k][j]);
    images.push_back(linear_form(field, c));
  }
  return f.substitute(images);
}

Point lift_point(const Point& y, const std::vector<Point>& basis) {
  Point x(basis.front().size(), Scalar());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += y[k] * basis[k][j];
  }
  return normalize_point(x);
}

}  // namespace pfaffcubic
