#include "pfaffcubic/curve.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/quadric.hpp"

namespace pfaffcubic {

namespace {

constexpr int kN = 5;

// Residue-level evaluation for the exhaustive scans.
class RawForm {
 public:
  explicit RawForm(const MultiPoly& f) : p_(f.field().characteristic()), n_(f.nvars()) {
    for (const auto& t : f.terms()) {
      std::vector<int> e(n_);
      for (int i = 0; i < n_; ++i) e[i] = t.m.e[i];
      terms_.push_back({std::move(e), t.c.residue()});
    }
  }
  std::uint64_t operator()(const std::vector<std::uint64_t>& x) const {
    std::uint64_t s = 0;
    for (const auto& [e, c] : terms_) {
      std::uint64_t v = c;
      for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < e[i]; ++k) v = v * x[i] % p_;
      }
      s = (s + v) % p_;
    }
    return s;
  }

 private:
  std::uint64_t p_;
  int n_;
  std::vector<std::pair<std::vector<int>, std::uint64_t>> terms_;
};

void require_small_prime(const FieldSpec& f) {
  if (!f.is_prime_field() || f.characteristic() > kMaxSearchPrime) {
    throw FieldLimitation("curve searches are exhaustive and need F_p with p <= 31, got " + f.name());
  }
}

Point combine(const std::vector<Scalar>& coeffs, const std::vector<Point>& vectors) {
  Point x(vectors.front().size(), Scalar());
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += coeffs[k] * vectors[k][j];
  }
  return x;
}

FieldSpec field_of(const Point& p) {
  for (const auto& c : p) {
    if (c.is_rational()) return FieldSpec::rationals();
    if (c.modulus()) return FieldSpec::prime(c.modulus());
  }
  throw DomainError("cannot tell the field of a zero vector");
}

std::size_t rank_of(const FieldSpec& f, const std::vector<Point>& rows) {
  Matrix m(f, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m.rank();
}

// All points of P^{n-1}(F_p) in a fixed order (first nonzero coordinate 1).
std::vector<Point> projective_points(const FieldSpec& f, int n) {
  const std::uint64_t p = f.characteristic();
  std::vector<Point> out;
  for (int lead = 0; lead < n; ++lead) {
    std::uint64_t total = 1;
    for (int i = lead + 1; i < n; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      Point x(n, Scalar::zero(f));
      x[lead] = Scalar::one(f);
      std::uint64_t rest = code;
      for (int i = lead + 1; i < n; ++i) {
        x[i] = Scalar::from_int(f, static_cast<long long>(rest % p));
        rest /= p;
      }
      out.push_back(std::move(x));
    }
  }
  return out;
}

bool vanishes_on_line(const MultiPoly& f, const LineP& l) {
  const FieldSpec& field = f.field();
  for (int k = 0; k <= f.degree(); ++k) {
    if (!f.evaluate(l.at(Scalar::one(field), Scalar::from_int(field, k))).is_zero()) return false;
  }
  return true;
}

std::vector<Scalar> gradient_at(const MultiPoly& f, const Point& p) {
  std::vector<Scalar> g;
  for (int i = 0; i < f.nvars(); ++i) g.push_back(f.partial(i).evaluate(p));
  return g;
}

// q(u) on span(basis) written as a quadric in the ambient coordinates: u is
// recovered from the pivot coordinates of the basis.
MultiPoly lift_from_span(const MultiPoly& q, const std::vector<Point>& basis) {
  const FieldSpec& f = q.field();
  const std::size_t m = basis.size(), n = basis.front().size();
  Matrix b(f, m, n);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < n; ++j) b(k, j) = basis[k][j];
  }
  Matrix e = b;
  const auto pivots = e.rref();
  if (pivots.size() != m) throw DomainError("span basis is dependent");
  Matrix bj(f, m, m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t c = 0; c < m; ++c) bj(k, c) = b(k, pivots[c]);
  }
  // x_J = bj^T u, so u = (bj^T)^{-1} x_J
  const Matrix inv = bj.transpose().inverse();
  std::vector<MultiPoly> images;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Scalar> c(n, Scalar::zero(f));
    for (std::size_t r = 0; r < m; ++r) c[pivots[r]] = inv(k, r);
    images.push_back(linear_form(f, c));
  }
  return q.substitute(images);
}

struct Candidate {
  LineP la, lb;
  std::vector<Point> plane;  // ambient basis of the conic plane
  MultiPoly conic;           // ambient quadric
  Point x1;
};

std::optional<LineP> line_through_leaving(const CubicThreefold& x, const Point& x2, const MultiPoly& h) {
  const FieldSpec& f = x.field();
  const auto grad = gradient_at(x.poly(), x2);
  Matrix g(f, 1, kN);
  for (int i = 0; i < kN; ++i) g(0, i) = grad[i];
  std::vector<Point> comp;
  for (const auto& w : g.kernel()) {
    std::vector<Point> rows = comp;
    rows.push_back(x2);
    rows.push_back(w);
    if (rank_of(f, rows) == rows.size()) comp.push_back(w);
  }
  const Matrix hess = hessian_at(x.poly(), x2);
  for (const auto& c : projective_points(f, static_cast<int>(comp.size()))) {
    const Point v = combine(c, comp);
    if (h.evaluate(v).is_zero()) continue;
    if (!x.poly().evaluate(v).is_zero()) continue;
    const auto hv = hess.apply(v);
    Scalar q = Scalar::zero(f);
    for (int i = 0; i < kN; ++i) q += v[i] * hv[i];
    if (!q.is_zero()) continue;
    return LineP::through(x2, v);
  }
  return std::nullopt;
}

// Rational points of a conic given in plane coordinates or in the ambient ones.
std::vector<Point> conic_points(const std::vector<Point>& plane, const MultiPoly& conic) {
  std::vector<Point> out;
  for (const auto& u : projective_points(conic.field(), 3)) {
    const Point p = combine(u, plane);
    const bool in_plane = conic.nvars() == static_cast<int>(plane.size());
    if (conic.evaluate(in_plane ? u : p).is_zero()) out.push_back(normalize_point(p));
  }
  return out;
}

}  // namespace

LineP LineP::through(const Point& p, const Point& q) {
  Matrix m = Matrix::from_rows(field_of(p), {p, q});
  if (m.rref().size() != 2) throw DomainError("a line needs two distinct points");
  return {m.row(0), m.row(1)};
}

std::vector<MultiPoly> LineP::ideal() const { return span_ideal(field_of(a), static_cast<int>(a.size()), {a, b}); }

bool LineP::contains(const Point& p) const { return rank_of(field_of(a), {a, b, p}) == 2; }

Point LineP::at(const Scalar& s, const Scalar& t) const { return combine({s, t}, {a, b}); }

namespace {

// Coordinates u with sum u_k basis[k] = p; the point must lie in the span.
Point coordinates_in(const Point& p, const std::vector<Point>& basis) {
  const FieldSpec f = field_of(p);
  Matrix m(f, p.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t j = 0; j < p.size(); ++j) m(j, k) = basis[k][j];
  }
  const auto u = m.solve(p);
  if (!u) throw DomainError("point is not in the span");
  return *u;
}

Point lift_all(const Point& y, const std::vector<Point>& basis) { return combine(y, basis); }

LineP lift_line(const LineP& l, const std::vector<Point>& basis) {
  return LineP::through(lift_all(l.a, basis), lift_all(l.b, basis));
}

bool smooth_on(const CubicThreefold& x, const Point& p) { return !is_zero_vector(gradient_at(x.poly(), p)); }

Point intersect_line_plane(const LineP& l, const MultiPoly& plane) {
  const Scalar pa = plane.evaluate(l.a), pb = plane.evaluate(l.b);
  return normalize_point(l.at(pb, -pa));
}

bool same_point(const Point& p, const Point& q) { return normalize_point(p) == normalize_point(q); }

// Number of singular points of a general hyperplane section.
int require_curve_source(const CubicThreefold& x) {
  const SegreReport r = classify(x);
  if (r.kind == SegreKind::Cone || r.kind == SegreKind::NonNormalPlane || r.kind == SegreKind::NonIntegral) {
    throw DomainError("the rational quartic construction needs a normal cubic that is not a cone, got " +
                      to_string(r.kind));
  }
  return r.kind == SegreKind::DoubleCurve ? r.curve_degree : 0;
}

std::optional<QuarticWitness> quartic_in_hyperplane(const CubicThreefold& x, const MultiPoly& h, int expected, int jobs) {
  const FieldSpec& f = x.field();
  const auto hb = hyperplane_basis(h);
  const MultiPoly s = restrict_to_span(x.poly(), hb);
  const auto lines = find_lines_on_surface(s, jobs);
  bool skew = false;
  for (std::size_t i = 0; i < lines.size() && !skew; ++i) {
    for (std::size_t j = i + 1; j < lines.size() && !skew; ++j) {
      skew = rank_of(f, {lines[i].a, lines[i].b, lines[j].a, lines[j].b}) == 4;
    }
  }
  if (!skew) return std::nullopt;
  try {
    // generality: the section has the expected isolated singularities only
    if (slice_singularities(x, h).geometric_points != expected) return std::nullopt;
  } catch (const DomainError&) {
    return std::nullopt;
  }
  for (const auto& la : lines) {
    for (const auto& lb : lines) {
      if (rank_of(f, {la.a, la.b, lb.a, lb.b}) != 4) continue;
      // planes through la: the pencil spanned by its two linear forms
      const auto forms = la.ideal();
      std::vector<MultiPoly> planes = {forms[1]};
      for (std::uint64_t c = 0; c < f.characteristic(); ++c) {
        planes.push_back(forms[0] + Scalar::from_int(f, static_cast<long long>(c)) * forms[1]);
      }
      for (const auto& plane : planes) {
        const ResidualConic rc = residual_conic(s, la, plane);
        if (rc.rank != 3 || rc.contains_line) continue;
        std::vector<Point> pb;
        for (const auto& q : rc.plane_basis) pb.push_back(lift_all(q, hb));
        const Point x1 = lift_all(intersect_line_plane(lb, plane), hb);
        if (!smooth_on(x, x1)) continue;
        const LineP la4 = lift_line(la, hb);
        const LineP l = lift_line(lb, hb);
        // conic in P^4: plane forms plus the conic read through pivot coordinates
        const auto plane_forms = span_ideal(f, kN, pb);
        const MultiPoly conic = lift_from_span(rc.conic, pb);
        for (const auto& x2 : conic_points(pb, rc.conic)) {
          if (same_point(x2, x1) || la4.contains(x2) || !smooth_on(x, x2)) continue;
          const auto lp = line_through_leaving(x, x2, h);
          if (!lp) continue;
          std::vector<MultiPoly> c2 = plane_forms;
          c2.push_back(conic);
          const GradedIdeal i_c2(f, kN, c2);
          const GradedIdeal i_l(f, kN, l.ideal()), i_lp(f, kN, lp->ideal());
          const GradedIdeal c4 = saturate(intersect(intersect(i_c2, i_l), i_lp));
          const auto hd = hilbert(c4);
          if (hd.dimension() != 1 || hd.degree() != 4 || hd.arithmetic_genus() != 0) continue;
          if (!c4.degree_piece(1).empty()) continue;
          QuarticWitness w;
          w.hyperplane = h;
          w.conic_plane = plane_forms;
          w.conic = conic;
          w.residual_to = la4;
          w.l = l;
          w.l_prime = *lp;
          w.x1 = normalize_point(x1);
          w.x2 = normalize_point(x2);
          w.ideal = c4.with_saturation(GradedIdeal::Saturation::Saturated);
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

// Points on the line through y and x other than x, in a fixed order.
std::vector<Point> points_off(const LineP& l, const Point& x) {
  const FieldSpec f = field_of(x);
  const Point other = rank_of(f, {x, l.a}) == 2 ? l.a : l.b;
  std::vector<Point> out = {normalize_point(other)};
  for (std::uint64_t c = 1; c < f.characteristic(); ++c) {
    out.push_back(normalize_point(combine({Scalar::one(f), Scalar::from_int(f, static_cast<long long>(c))}, {other, x})));
  }
  return out;
}

bool hilbert_is_cubic_surface(const HilbertData& hd) {
  if (hd.dimension() != 2 || hd.degree() != 3) return false;
  for (long m = 0; m < 6; ++m) {
    if (hd.evaluate(m) * 2 != (m + 1) * (3 * m + 2)) return false;
  }
  return true;
}

}  // namespace

std::vector<LineP> find_lines_on_surface(const MultiPoly& s, int jobs) {
  const FieldSpec& f = s.field();
  require_small_prime(f);
  if (s.nvars() != 4 || !s.is_homogeneous()) throw DomainError("expected a form in 4 variables");
  const std::uint64_t p = f.characteristic();
  const RawForm form(s);
  // lines of P^3 as 2x4 matrices in reduced row echelon form with pivots i < j
  struct Cell {
    int i, j;
    std::vector<int> free_a, free_b;
    std::uint64_t total = 1;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Cell cell{i, j, {}, {}};
      for (int c = i + 1; c < 4; ++c) {
        if (c != j) cell.free_a.push_back(c);
      }
      for (int c = j + 1; c < 4; ++c) cell.free_b.push_back(c);
      for (std::size_t k = 0; k < cell.free_a.size() + cell.free_b.size(); ++k) cell.total *= p;
      cells.push_back(std::move(cell));
    }
  }
  auto scan = [&](const Cell& cell, std::uint64_t lo, std::uint64_t hi, std::vector<LineP>& out) {
    std::vector<std::uint64_t> a(4), b(4), q(4);
    for (std::uint64_t code = lo; code < hi; ++code) {
      std::fill(a.begin(), a.end(), 0);
      std::fill(b.begin(), b.end(), 0);
      a[cell.i] = 1;
      b[cell.j] = 1;
      std::uint64_t rest = code;
      for (int c : cell.free_a) {
        a[c] = rest % p;
        rest /= p;
      }
      for (int c : cell.free_b) {
        b[c] = rest % p;
        rest /= p;
      }
      if (form(a) || form(b)) continue;
      bool on = true;
      for (std::uint64_t t = 1; t <= 2 && on; ++t) {
        for (int c = 0; c < 4; ++c) q[c] = (a[c] + t * b[c]) % p;
        on = form(q) == 0;
      }
      if (!on) continue;
      LineP l;
      for (int c = 0; c < 4; ++c) {
        l.a.push_back(Scalar::from_int(f, static_cast<long long>(a[c])));
        l.b.push_back(Scalar::from_int(f, static_cast<long long>(b[c])));
      }
      out.push_back(std::move(l));
    }
  };
  // each cell is cut into `jobs` contiguous ranges; merging in range order
  // reproduces the serial result
  const std::uint64_t parts = static_cast<std::uint64_t>(std::max(1, jobs));
  std::vector<std::vector<LineP>> chunks(cells.size() * parts);
  {
    std::vector<std::jthread> workers;
    for (std::uint64_t w = 0; w < parts; ++w) {
      auto work = [&, w] {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          const auto& cell = cells[c];
          scan(cell, cell.total * w / parts, cell.total * (w + 1) / parts, chunks[c * parts + w]);
        }
      };
      if (parts == 1) {
        work();
      } else {
        workers.emplace_back(work);
      }
    }
  }
  std::vector<LineP> out;
  for (auto& chunk : chunks) {
    for (auto& l : chunk) out.push_back(std::move(l));
  }
  return out;
}

ResidualConic residual_conic(const MultiPoly& s, const LineP& line, const MultiPoly& plane) {
  const FieldSpec& f = s.field();
  if (!vanishes_on_line(s, line)) throw DomainError("the line is not on the surface");
  if (!plane.evaluate(line.a).is_zero() || !plane.evaluate(line.b).is_zero()) {
    throw DomainError("the plane does not contain the line");
  }
  ResidualConic out;
  out.plane_basis = hyperplane_basis(plane);
  const MultiPoly restricted = restrict_to_span(s, out.plane_basis);
  const auto forms = span_ideal(f, 3, {coordinates_in(line.a, out.plane_basis), coordinates_in(line.b, out.plane_basis)});
  out.line_form = forms.front();
  const auto q = restricted.exact_divide(out.line_form);
  if (!q) throw VerificationFailure("plane section is not divisible by the line");
  out.conic = *q;
  if (out.conic.is_zero()) throw DomainError("the plane lies on the surface");
  out.rank = static_cast<int>(quadric_rank(out.conic));
  out.contains_line = out.conic.exact_divide(out.line_form).has_value();
  return out;
}

QuarticWitness build_rational_quartic(const CubicThreefold& x, std::uint64_t seed, int hyperplanes, int jobs) {
  require_small_prime(x.field());
  const int expected = require_curve_source(x);
  Rng rng(seed);
  for (int k = 1; k <= hyperplanes; ++k) {
    const MultiPoly h = linear_form(x.field(), rng.vector(x.field(), kN));
    if (h.is_zero()) continue;
    if (auto w = quartic_in_hyperplane(x, h, expected, jobs)) {
      w->hyperplanes_tried = k;
      return *w;
    }
  }
  throw SearchExhausted("no rational quartic found in " + std::to_string(hyperplanes) + " hyperplane sections over " +
                        x.field().name());
}

ScrollWitness cross_ratio_scroll(const CubicThreefold& x, const QuarticWitness& w) {
  const FieldSpec& f = x.field();
  require_small_prime(f);
  const auto on_conic = [&](const Point& p) {
    for (const auto& g : w.conic_plane) {
      if (!g.evaluate(p).is_zero()) return false;
    }
    return w.conic.evaluate(p).is_zero();
  };
  if (!on_conic(w.x1) || !on_conic(w.x2) || same_point(w.x1, w.x2)) throw DomainError("inconsistent quartic witness");

  ScrollWitness sw;
  sw.x1 = w.x1;
  sw.x2 = w.x2;
  // third anchor: the first conic point after x1, x2 in the plane's own order
  Matrix pm(f, w.conic_plane.size(), kN);
  for (std::size_t r = 0; r < w.conic_plane.size(); ++r) {
    const auto c = linear_coefficients(w.conic_plane[r]);
    for (int j = 0; j < kN; ++j) pm(r, j) = c[j];
  }
  const auto pb = pm.kernel();
  bool have_x3 = false;
  for (const auto& p : conic_points(pb, w.conic)) {
    if (!same_point(p, w.x1) && !same_point(p, w.x2)) {
      sw.x3 = p;
      have_x3 = true;
      break;
    }
  }
  if (!have_x3) throw SearchExhausted("the conic has no third rational point");

  bool anchored = false;
  for (const auto& y1 : points_off(w.l, w.x1)) {
    for (const auto& y2 : points_off(w.l_prime, w.x2)) {
      if (rank_of(f, {sw.x1, sw.x2, sw.x3, y1, y2}) != 5) continue;
      sw.y1 = y1;
      sw.y2 = y2;
      anchored = true;
      break;
    }
    if (anchored) break;
  }
  if (!anchored) throw SearchExhausted("no directrix anchors span P^4 with the conic plane");
  sw.y3 = combine({Scalar::one(f), Scalar::one(f)}, {sw.y1, sw.y2});
  sw.directrix = LineP::through(sw.y1, sw.y2);

  // conic in the basis (x1, x2, x3): a u1 u2 + b u0 u2 + c u0 u1
  const std::vector<Point> frame = {sw.x1, sw.x2, sw.x3};
  const MultiPoly q = restrict_to_span(w.conic, frame);
  const auto coef = [&](int i, int j) { return q.coefficient(Monomial::variable(i) * Monomial::variable(j)); };
  const Scalar a = coef(1, 2), b = coef(0, 2), c = coef(0, 1);
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw DomainError("the conic is singular");

  // the projectivity (1:0, 0:1, 1:1) -> (x1, x2, x3) on the conic and -> (y1, y2, y3) on D
  std::vector<Point> samples;
  const auto rulings = projective_points(f, 2);
  for (const auto& st : rulings) {
    const Scalar& s = st[0];
    const Scalar& t = st[1];
    const Point z = combine({s, t}, {sw.y1, sw.y2});
    const Point zp = combine({a * s * (s - t), b * t * (t - s), c * s * t}, frame);
    for (int k = 0; k <= 2; ++k) samples.push_back(combine({Scalar::one(f), Scalar::from_int(f, k)}, {z, zp}));
    samples.push_back(zp);
  }
  // a quadric through more than six rulings of the scroll contains it
  if (rulings.size() <= 6) throw FieldLimitation("too few rulings over " + f.name());
  const auto quadrics = forms_vanishing_at(f, kN, samples, 2);
  if (quadrics.size() != 3) throw VerificationFailure("the scroll is not cut out by three quadrics");
  sw.ideal = GradedIdeal(f, kN, quadrics);
  if (!hilbert_is_cubic_surface(hilbert(sw.ideal))) {
    throw VerificationFailure("the scroll has Hilbert polynomial " + hilbert(sw.ideal).polynomial_string());
  }
  if (!w.ideal.contains(sw.ideal)) throw VerificationFailure("the scroll does not contain the quartic");
  for (const auto& y : {sw.y1, sw.y2, sw.y3}) {
    for (const auto& g : quadrics) {
      if (!g.evaluate(y).is_zero()) throw VerificationFailure("the directrix is not on the scroll");
    }
  }
  return sw;
}

GradedIdeal residual_quintic(const CubicThreefold& x, const ScrollWitness& sw, const QuarticWitness& w, int d_max) {
  const FieldSpec& f = x.field();
  if (!(sw.ideal.field() == f) || !(w.ideal.field() == f)) throw DomainError("witnesses over different fields");
  if (!w.ideal.contains(x.poly())) throw DomainError("the quartic is not on the cubic");
  const GradedIdeal both = sw.ideal.add({x.poly()});
  const GradedIdeal c = saturate(ideal_quotient(both, w.ideal));
  const HilbertData hd = hilbert(c, d_max);
  if (hd.polynomial_string() != "5*m") {
    throw SearchExhausted("residual curve has Hilbert polynomial " + hd.polynomial_string() + ", expected 5*m");
  }
  if (!c.degree_piece(1).empty()) throw SearchExhausted("residual curve lies in a hyperplane");
  if (c.degree_piece(2).size() != 5) {
    throw SearchExhausted("residual curve has " + std::to_string(c.degree_piece(2).size()) + " quadrics, expected 5");
  }
  return c.with_saturation(GradedIdeal::Saturation::Saturated);
}

QuinticResult forge_quintic(const CubicThreefold& x, std::uint64_t seed, int retries, int d_max, int jobs) {
  require_small_prime(x.field());
  require_curve_source(x);
  Rng seeds(seed);
  std::string last = "no attempts";
  for (int k = 1; k <= retries; ++k) {
    const std::uint64_t s = k == 1 ? seed : seeds.next();
    try {
      QuinticResult r;
      r.quartic = build_rational_quartic(x, s, 200, jobs);
      r.scroll = cross_ratio_scroll(x, r.quartic);
      r.curve = residual_quintic(x, r.scroll, r.quartic, d_max);
      r.attempts = k;
      return r;
    } catch (const SearchExhausted& e) {
      last = e.what();
    }
  }
  throw SearchExhausted("no elliptic quintic after " + std::to_string(retries) + " attempts; last: " + last);
}

}  // namespace pfaffcubic
