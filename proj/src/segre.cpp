#include "pfaffcubic/segre.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/quadric.hpp"
#include "pfaffcubic/univariate.hpp"

namespace pfaffcubic {

namespace {

constexpr int kN = 5;

struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string x = a[i].to_string(), y = b[i].to_string();
      if (x != y) return x < y;
    }
    return false;
  }
};
using PointSet = std::set<Point, PointLess>;

MultiPoly random_linear(const FieldSpec& f, int n, Rng& rng) {
  for (;;) {
    MultiPoly h = rng.form(f, n, 1);
    if (!h.is_zero()) return h;
  }
}

int hessian_rank(const MultiPoly& f, const Point& p) { return static_cast<int>(hessian_at(f, p).rank()); }

MultiPoly minor3(const std::vector<std::vector<MultiPoly>>& jac, const std::array<int, 3>& r,
                 const std::array<int, 3>& c) {
  auto e = [&](int i, int j) -> const MultiPoly& { return jac[r[i]][c[j]]; };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

// Singular points of the reduced curve V(gens) of codimension 3.
GradedIdeal curve_singularities(const FieldSpec& f, const std::vector<MultiPoly>& gens) {
  std::vector<std::vector<MultiPoly>> jac;
  for (const auto& g : gens) {
    std::vector<MultiPoly> row;
    for (int i = 0; i < kN; ++i) row.push_back(g.partial(i));
    jac.push_back(std::move(row));
  }
  std::vector<MultiPoly> more = gens;
  const int m = static_cast<int>(gens.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        for (int i = 0; i < kN; ++i) {
          for (int j = i + 1; j < kN; ++j) {
            for (int k = j + 1; k < kN; ++k) {
              MultiPoly d = minor3(jac, {a, b, c}, {i, j, k});
              if (!d.is_zero()) more.push_back(std::move(d));
            }
          }
        }
      }
    }
  }
  return saturate(GradedIdeal(f, kN, std::move(more)));
}

bool vanishes_on(const std::vector<MultiPoly>& gens, const Point& p) {
  return std::all_of(gens.begin(), gens.end(), [&](const MultiPoly& g) { return g.evaluate(p).is_zero(); });
}

// ---- linear factors ----

LinearFactorization found(const MultiPoly& f, const MultiPoly& l, const std::string& method) {
  const auto q = f.exact_divide(l);
  if (!q) throw VerificationFailure("linear factor does not divide");
  LinearFactorization r;
  r.status = LinearFactorization::Status::Found;
  r.linear = l;
  r.quadric = *q;
  r.method = method;
  return r;
}

std::optional<MultiPoly> scan_hyperplanes(const MultiPoly& f) {
  const FieldSpec& field = f.field();
  const std::uint64_t p = field.characteristic();
  struct RawTerm {
    std::array<int, kN> e;
    std::uint64_t c;
  };
  std::vector<RawTerm> terms;
  for (const auto& t : f.terms()) {
    RawTerm r;
    for (int i = 0; i < kN; ++i) r.e[i] = t.m.e[i];
    r.c = t.c.residue();
    terms.push_back(r);
  }
  auto eval = [&](const std::array<std::uint64_t, kN>& x) {
    std::uint64_t s = 0;
    for (const auto& t : terms) {
      std::uint64_t v = t.c;
      for (int i = 0; i < kN; ++i) {
        for (int k = 0; k < t.e[i]; ++k) v = v * x[i] % p;
      }
      s = (s + v) % p;
    }
    return s;
  };
  std::uint64_t state = 0x2545f4914f6cdd1dULL;
  auto draw = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return (state >> 33) % p;
  };
  for (int pivot = 0; pivot < kN; ++pivot) {
    const int free = kN - 1 - pivot;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::array<std::uint64_t, kN> l{};
      l[pivot] = 1;
      std::uint64_t rest = code;
      for (int j = pivot + 1; j < kN; ++j) {
        l[j] = rest % p;
        rest /= p;
      }
      bool zero = true;
      for (int trial = 0; trial < 3 && zero; ++trial) {
        std::array<std::uint64_t, kN> x{};
        std::uint64_t s = 0;
        for (int j = 0; j < kN; ++j) {
          if (j == pivot) continue;
          x[j] = draw();
          s = (s + l[j] * x[j]) % p;
        }
        x[pivot] = (p - s) % p;
        zero = eval(x) == 0;
      }
      if (!zero) continue;
      std::vector<Scalar> c;
      for (int j = 0; j < kN; ++j) c.push_back(Scalar::from_int(field, static_cast<long long>(l[j])));
      const MultiPoly lf = linear_form(field, c);
      if (f.exact_divide(lf)) return lf;
    }
  }
  return std::nullopt;
}

// Points of X on random lines; a rational linear factor meets every line in
// a rational point, and four such points on independent lines span it.
std::optional<MultiPoly> lines_heuristic(const MultiPoly& f, Rng& rng) {
  const FieldSpec& field = f.field();
  std::vector<std::vector<Point>> per_line;
  for (int attempt = 0; attempt < 12 && per_line.size() < 4; ++attempt) {
    const auto a = rng.vector(field, kN);
    const auto b = rng.vector(field, kN);
    std::vector<MultiPoly> images;
    for (int j = 0; j < kN; ++j) {
      images.push_back(a[j] * MultiPoly::variable(field, 1, 0) + MultiPoly::constant(field, 1, b[j]));
    }
    const MultiPoly g = f.substitute(images);  // F(s a + b)
    if (g.is_zero()) continue;
    std::vector<Scalar> coeffs(4, Scalar::zero(field));
    for (const auto& t : g.terms()) coeffs[t.m.e[0]] = t.c;
    std::vector<Point> pts;
    if (coeffs[3].is_zero()) pts.push_back(a);  // a root at infinity
    for (const auto& s : roots(UniPoly(field, coeffs))) {
      Point p(kN);
      for (int j = 0; j < kN; ++j) p[j] = s * a[j] + b[j];
      if (!is_zero_vector(p)) pts.push_back(p);
    }
    if (!pts.empty()) per_line.push_back(std::move(pts));
  }
  if (per_line.size() < 4) return std::nullopt;
  std::array<std::size_t, 4> idx{};
  for (;;) {
    std::vector<Point> chosen;
    for (int i = 0; i < 4; ++i) chosen.push_back(per_line[i][idx[i]]);
    const auto forms = span_ideal(field, kN, chosen);
    if (forms.size() == 1 && f.exact_divide(forms[0])) return forms[0];
    int i = 0;
    while (i < 4 && ++idx[i] == per_line[i].size()) idx[i++] = 0;
    if (i == 4) break;
  }
  return std::nullopt;
}

LinearFactorization factor_with_dimension(const CubicThreefold& x, int sing_dim, std::uint64_t seed) {
  LinearFactorization r;
  if (sing_dim <= 1) {
    r.status = LinearFactorization::Status::None;
    r.method = "singular locus has dimension at most 1";
    return r;
  }
  const FieldSpec& field = x.field();
  if (field.is_prime_field() && field.characteristic() <= 31) {
    if (auto l = scan_hyperplanes(x.poly())) return found(x.poly(), *l, "exhaustive hyperplane scan");
    r.status = LinearFactorization::Status::None;
    r.method = "exhaustive hyperplane scan";
    return r;
  }
  Rng rng(seed ^ 0x6c696e6573ULL);
  for (int round = 0; round < 3; ++round) {
    if (auto l = lines_heuristic(x.poly(), rng)) return found(x.poly(), *l, "points on random lines");
  }
  r.status = LinearFactorization::Status::Undetermined;
  r.method = "points on random lines";
  return r;
}

int scheme_dimension(const GradedIdeal& j, int d_max = kDefaultHilbertDegree) {
  if (j.is_unit()) return -1;
  return hilbert(j, d_max).dimension();
}

// ---- classification pieces ----

std::vector<MultiPoly> find_singular_plane(const CubicThreefold& x, const GradedIdeal& j, Rng& rng) {
  const FieldSpec& f = x.field();
  std::vector<Point> pts;
  for (int attempt = 0; attempt < 12 && pts.size() < 3; ++attempt) {
    const auto found_pts = rational_points(j.add({random_linear(f, kN, rng), random_linear(f, kN, rng)}));
    if (found_pts.size() != 1) continue;
    pts.push_back(found_pts[0]);
    if (span_ideal(f, kN, pts).size() != static_cast<std::size_t>(kN - pts.size())) pts.pop_back();
  }
  if (pts.size() < 3) return {};
  auto plane = span_ideal(f, kN, pts);
  const GradedIdeal pi(f, kN, plane);
  for (const auto& d : partials(x.form())) {
    if (!pi.contains(d.poly())) return {};
  }
  return plane;
}

// Median of three hyperplane section counts: a special hyperplane may pass
// through a singular point of the curve or through an isolated singular point.
// Point counts of five hyperplane sections, most frequent first (larger on
// ties). Over small fields a section through a special point or an unlucky
// projection undercounts often enough that a single value is not reliable.
std::vector<long> curve_degree_candidates(const GradedIdeal& j, Rng& rng) {
  std::map<long, int> freq;
  for (int k = 0; k < 5; ++k) {
    try {
      ++freq[count_points(j.add({random_linear(j.field(), kN, rng)}), rng)];
    } catch (const DomainError&) {
    }
  }
  std::vector<std::pair<int, long>> order;
  for (const auto& [d, n] : freq) {
    if (d > 0) order.push_back({n, d});
  }
  std::sort(order.rbegin(), order.rend());
  std::vector<long> out;
  for (const auto& [n, d] : order) out.push_back(d);
  return out;
}

long curve_degree_estimate(const GradedIdeal& j, Rng& rng) {
  const auto c = curve_degree_candidates(j, rng);
  return c.empty() ? 0 : c.front();
}

struct CurveData {
  GradedIdeal reduced;
  std::vector<MultiPoly> generators;
  std::vector<Point> samples;
  int degree = 0;
};

CurveData reduced_curve_of_degree(const CubicThreefold& x, const GradedIdeal& j, Rng& rng, long d, int d_max) {
  const FieldSpec& f = x.field();
  PointSet seen;
  std::vector<Point> samples;
  std::size_t target = std::max<std::size_t>(8, 4 * d + 3);
  for (int round = 0; round < 3; ++round) {
    for (int tries = 0; tries < 400 && samples.size() < target; ++tries) {
      std::vector<Point> found;
      try {
        found = rational_points(j.add({random_linear(f, kN, rng)}));
      } catch (const DomainError&) {
        continue;  // the hyperplane contains a component of the curve
      }
      for (const auto& p : found) {
        if (hessian_rank(x.poly(), p) == kN - 1) continue;  // ordinary nodes off the curve
        if (seen.insert(p).second) samples.push_back(p);
      }
    }
    // small fields can run out of rational points; the certificate below decides
    const bool stalled = samples.size() < target;
    if (samples.size() < static_cast<std::size_t>(d) + 2) break;
    std::vector<MultiPoly> gens = forms_vanishing_at(f, kN, samples, 1);
    const GradedIdeal lin(f, kN, gens);
    for (auto& q : forms_vanishing_at(f, kN, samples, 2)) {
      if (!lin.contains(q)) gens.push_back(std::move(q));
    }
    // keep a minimal set of quadric generators
    std::vector<MultiPoly> minimal;
    for (const auto& g : gens) {
      if (minimal.empty() || !GradedIdeal(f, kN, minimal).contains(g)) minimal.push_back(g);
    }
    GradedIdeal r(f, kN, minimal);
    const auto h = hilbert(r, d_max);
    bool ok = h.dimension() == 1 && h.degree() == d;
    // the curve lies in Sing(X) and has the degree of its one-dimensional part
    ok = ok && r.contains(j);
    if (ok) return {saturate(r), minimal, samples, static_cast<int>(d)};
    if (stalled) break;
    target *= 2;
  }
  throw Undetermined("could not interpolate the reduced double curve from sampled points");
}

CurveData reduced_curve(const CubicThreefold& x, const GradedIdeal& j, Rng& rng, int d_max) {
  const auto candidates = curve_degree_candidates(j, rng);
  if (candidates.empty()) throw Undetermined("could not measure the degree of the double curve");
  for (std::size_t k = 0; k + 1 < candidates.size(); ++k) {
    try {
      return reduced_curve_of_degree(x, j, rng, candidates[k], d_max);
    } catch (const Undetermined&) {
    }
  }
  return reduced_curve_of_degree(x, j, rng, candidates.back(), d_max);
}

CurveKind curve_kind_of(const CurveData& c) {
  const FieldSpec& f = c.reduced.field();
  std::vector<MultiPoly> linear, quadrics;
  for (const auto& g : c.generators) (g.degree() == 1 ? linear : quadrics).push_back(g);
  switch (c.degree) {
    case 1:
      return CurveKind::Line;
    case 2: {
      if (linear.size() != 2) throw Undetermined("degree-2 double curve does not span a plane");
      Matrix a(f, 2, kN);
      for (int r = 0; r < 2; ++r) {
        const auto co = linear_coefficients(linear[r]);
        for (int k = 0; k < kN; ++k) a(r, k) = co[k];
      }
      const auto basis = a.kernel();
      for (const auto& q : quadrics) {
        const MultiPoly qs = restrict_to_span(q, basis);
        if (qs.is_zero()) continue;
        return quadric_rank(qs) == 3 ? CurveKind::Conic : CurveKind::TwoLines;
      }
      throw Undetermined("no quadric cuts the degree-2 double curve in its plane");
    }
    case 3: {
      if (linear.size() != 1) throw Undetermined("degree-3 double curve does not span a P^3");
      const GradedIdeal sing = curve_singularities(f, c.generators);
      if (sing.is_unit()) throw Undetermined("smooth degree-3 double curve");
      const auto vertex = rational_points(sing);
      if (vertex.size() != 1) throw Undetermined("degree-3 double curve is not three concurrent lines");
      // every sample must lie on a line of the curve through the vertex
      const Point& s = vertex[0];
      std::vector<std::vector<MultiPoly>> lines;
      for (const auto& y : c.samples) {
        if (y == s) continue;
        bool known = false;
        for (const auto& l : lines) known = known || vanishes_on(l, y);
        if (known) continue;
        for (int t = 1; t <= 3; ++t) {
          Point z(kN);
          for (int k = 0; k < kN; ++k) z[k] = s[k] + Scalar::from_int(f, t) * y[k];
          if (!vanishes_on(c.generators, z)) throw Undetermined("degree-3 double curve is not a union of lines");
        }
        lines.push_back(span_ideal(f, kN, {s, y}));
      }
      if (lines.size() != 3) throw Undetermined("degree-3 double curve is not three concurrent lines");
      return CurveKind::ThreeConcurrentLines;
    }
    case 4: {
      if (!linear.empty()) throw Undetermined("degree-4 double curve is degenerate");
      return curve_singularities(f, c.generators).is_unit() ? CurveKind::RationalQuartic : CurveKind::TwoConicsMeeting;
    }
    default:
      throw Undetermined("double curve of degree " + std::to_string(c.degree));
  }
}

CurveType type_from_ranks(const std::vector<int>& ranks, std::size_t distinct, int degree) {
  if (std::any_of(ranks.begin(), ranks.end(), [](int r) { return r == 3; })) return CurveType::First;
  if (distinct > static_cast<std::size_t>(3 * degree)) return CurveType::Second;
  throw Undetermined("too few sample points to certify a double curve of second type");
}

std::uint32_t reduction_prime(const MultiPoly& f) {
  for (std::uint32_t p = 32003;; p += 2) {
    if (!is_prime(p)) continue;
    try {
      if (!f.change_field(FieldSpec::prime(p)).is_zero()) return p;
    } catch (const DomainError&) {
    }
  }
}

SegreReport classify_over_prime(const CubicThreefold& x, std::uint64_t seed, int d_max) {
  SegreReport rep;
  rep.field = x.field();
  Rng rng(seed);
  const GradedIdeal j = singular_scheme(x);
  const int dim = scheme_dimension(j, d_max);
  rep.singular_hilbert = j.is_unit() ? "0" : hilbert(j, d_max).polynomial_string();

  auto fac = factor_with_dimension(x, dim, seed);
  if (fac.status == LinearFactorization::Status::Found) {
    rep.kind = SegreKind::NonIntegral;
    rep.factors = fac;
    return rep;
  }
  const auto apex = cone_apex(x);
  if (!apex.empty()) {
    rep.kind = SegreKind::Cone;
    rep.apex = apex;
    return rep;
  }
  if (dim >= 2) {
    auto plane = find_singular_plane(x, j, rng);
    if (plane.empty()) {
      if (fac.status == LinearFactorization::Status::Undetermined) {
        throw Undetermined("two-dimensional singular locus without a detected linear factor or plane");
      }
      throw Undetermined("two-dimensional singular locus that is not a plane");
    }
    rep.kind = SegreKind::NonNormalPlane;
    rep.plane_ideal = std::move(plane);
    return rep;
  }
  if (dim == 1) {
    const CurveData c = reduced_curve(x, j, rng, d_max);
    rep.kind = SegreKind::DoubleCurve;
    rep.curve_degree = c.degree;
    rep.curve_ideal = c.reduced.gb();
    rep.curve_kind = curve_kind_of(c);
    std::vector<int> ranks;
    for (const auto& p : c.samples) ranks.push_back(hessian_rank(x.poly(), p));
    rep.type = type_from_ranks(ranks, c.samples.size(), c.degree);
    const GradedIdeal rest = saturate(j, c.reduced);
    if (!rest.is_unit()) {
      if (scheme_dimension(rest, d_max) != 0) throw Undetermined("singular locus has further curve components");
      rep.extra_points = count_points(rest, rng);
      for (const auto& p : rational_points(rest)) {
        const int r = hessian_rank(x.poly(), p);
        rep.points.push_back({p, r, double_point_label(r)});
      }
    }
    return rep;
  }
  if (dim == 0) {
    rep.kind = SegreKind::IsolatedDoublePoints;
    rep.geometric_points = count_points(j, rng);
    for (const auto& p : rational_points(j)) {
      const int r = hessian_rank(x.poly(), p);
      rep.points.push_back({p, r, double_point_label(r)});
    }
    return rep;
  }
  rep.kind = SegreKind::Smooth;
  return rep;
}

}  // namespace

CubicThreefold::CubicThreefold(HomogeneousForm f) : f_(std::move(f)) {
  if (f_.is_zero() || f_.degree() != 3 || f_.nvars() != kN) {
    throw DomainError("a cubic threefold needs a nonzero cubic form in x0..x4");
  }
}

CubicThreefold CubicThreefold::parse(const std::string& text, const FieldSpec& field) {
  return CubicThreefold(parse_form(text, kN, field));
}

Matrix hessian_at(const MultiPoly& f, const Point& p) {
  const int n = f.nvars();
  Matrix h(f.field(), n, n);
  for (int i = 0; i < n; ++i) {
    const MultiPoly di = f.partial(i);
    for (int j = i; j < n; ++j) {
      h(i, j) = di.partial(j).evaluate(p);
      h(j, i) = h(i, j);
    }
  }
  return h;
}

std::vector<Point> cone_apex(const CubicThreefold& x) {
  const FieldSpec& f = x.field();
  Matrix a(f, 15, kN);
  int row = 0;
  for (int i = 0; i < kN; ++i) {
    const MultiPoly di = x.poly().partial(i);
    for (int j = i; j < kN; ++j) {
      const MultiPoly dij = di.partial(j);
      for (int k = 0; k < kN; ++k) a(row, k) = dij.partial(k).constant_term();
      ++row;
    }
  }
  return a.kernel();
}

LinearFactorization factor_off_linear(const CubicThreefold& x, std::uint64_t seed) {
  return factor_with_dimension(x, scheme_dimension(singular_scheme(x)), seed);
}

GradedIdeal singular_scheme(const CubicThreefold& x) {
  return saturate(GradedIdeal(x.field(), kN, as_polys(partials(x.form()))));
}

TangentConeData tangent_cone_at(const CubicThreefold& x, const Point& p) {
  const FieldSpec& f = x.field();
  if (p.size() != kN || is_zero_vector(p)) throw DomainError("expected a point of P^4");
  int pivot = 0;
  while (p[pivot].is_zero()) ++pivot;
  Matrix g(f, kN, kN);
  for (int k = 0; k < kN; ++k) g(0, k) = p[k];
  for (int r = 1, j = 0; r < kN; ++r, ++j) {
    if (j == pivot) ++j;
    g(r, j) = Scalar::one(f);
  }
  TangentConeData out;
  out.point = normalize_point(p);
  out.change = LinearChange(g);
  const MultiPoly moved = apply_change(x.poly(), out.change);
  std::vector<MultiPoly::Term> q, c;
  for (const auto& t : moved.terms()) {
    if (t.m.e[0] >= 2) throw DomainError("point is not a singular point of the cubic");
    if (t.m.e[0] == 1) {
      MultiPoly::Term s = t;
      s.m.e[0] = 0;
      --s.m.deg;
      q.push_back(s);
    } else {
      c.push_back(t);
    }
  }
  out.q = MultiPoly::from_terms(f, kN, std::move(q));
  out.c = MultiPoly::from_terms(f, kN, std::move(c));
  out.rank = out.q.is_zero() ? 0 : static_cast<int>(quadric_rank(out.q));
  return out;
}

std::string double_point_label(int rank) {
  switch (rank) {
    case 4:
    case 3:
      return "conic node";
    case 2:
      return "binode";
    case 1:
      return "unode";
    default:
      return "triple point";
  }
}

CurveTypeResult double_curve_type(const CubicThreefold& x, const GradedIdeal& curve, Rng& rng) {
  const FieldSpec& f = x.field();
  const auto h = hilbert(curve);
  if (h.dimension() != 1) throw DomainError("double_curve_type needs a curve");
  const int d = static_cast<int>(h.degree());
  CurveTypeResult out;
  PointSet seen;
  const std::size_t target = std::max(8, 3 * d + 1);
  for (int tries = 0; tries < 400 && out.samples.size() < target; ++tries) {
    for (const auto& p : rational_points(curve.add({random_linear(f, kN, rng)}))) {
      if (!seen.insert(p).second) continue;
      out.samples.push_back(p);
      out.ranks.push_back(tangent_cone_at(x, p).rank);
    }
  }
  if (out.samples.size() < 8) throw Undetermined("fewer than 8 rational points on the curve");
  out.type = type_from_ranks(out.ranks, out.samples.size(), d);
  return out;
}

std::string to_string(SegreKind k) {
  switch (k) {
    case SegreKind::Smooth:
      return "Smooth";
    case SegreKind::IsolatedDoublePoints:
      return "IsolatedDoublePoints";
    case SegreKind::DoubleCurve:
      return "DoubleCurve";
    case SegreKind::Cone:
      return "Cone";
    case SegreKind::NonNormalPlane:
      return "NonNormalPlane";
    case SegreKind::NonIntegral:
      return "NonIntegral";
  }
  return "?";
}

std::string to_string(CurveKind k) {
  switch (k) {
    case CurveKind::Line:
      return "Line";
    case CurveKind::Conic:
      return "Conic";
    case CurveKind::TwoLines:
      return "TwoLines";
    case CurveKind::ThreeConcurrentLines:
      return "ThreeConcurrentLines";
    case CurveKind::RationalQuartic:
      return "RationalQuartic";
    case CurveKind::TwoConicsMeeting:
      return "TwoConicsMeeting";
  }
  return "?";
}

namespace {

// A rational factorization l*Q reduces to one modulo every prime that keeps
// F nonzero, so an empty exhaustive scan modulo one such prime rules it out.
bool no_linear_factor_mod_small_prime(const MultiPoly& f) {
  for (std::uint64_t p : {11u, 13u, 17u}) {
    MultiPoly fp;
    try {
      fp = f.change_field(FieldSpec::prime(p));
    } catch (const DomainError&) {
      continue;
    }
    if (fp.is_zero() || fp.degree() != 3) continue;
    return !scan_hyperplanes(fp).has_value();
  }
  return false;
}

}  // namespace

SegreReport classify(const CubicThreefold& x, std::uint64_t seed, int d_max) {
  if (x.field().is_prime_field()) return classify_over_prime(x, seed, d_max);
  const std::uint32_t p = reduction_prime(x.poly());
  const FieldSpec fp = FieldSpec::prime(p);
  // linear factors are looked for over Q itself
  const GradedIdeal j = singular_scheme(CubicThreefold(HomogeneousForm(x.poly().change_field(fp))));
  const int dim = scheme_dimension(j, d_max);
  auto fac = factor_with_dimension(x, dim, seed);
  if (fac.status == LinearFactorization::Status::Found) {
    SegreReport rep;
    rep.kind = SegreKind::NonIntegral;
    rep.field = x.field();
    rep.singular_hilbert = hilbert(j, d_max).polynomial_string();
    rep.factors = fac;
    return rep;
  }
  if (fac.status == LinearFactorization::Status::Undetermined && !no_linear_factor_mod_small_prime(x.poly())) {
    throw Undetermined("could not decide whether the cubic has a rational linear factor");
  }
  SegreReport rep = classify_over_prime(CubicThreefold(HomogeneousForm(x.poly().change_field(fp))), seed, d_max);
  rep.field = x.field();
  rep.reduced_modulo = p;
  return rep;
}

std::string ade_label(AdeType t, int milnor) {
  switch (t) {
    case AdeType::A1:
      return "A1";
    case AdeType::A2:
      return "A2";
    case AdeType::Ak:
      return "A" + std::to_string(milnor);
    case AdeType::Other:
      return "other";
  }
  return "?";
}

SliceReport slice_singularities(const CubicThreefold& x, const MultiPoly& h) {
  const FieldSpec& f = x.field();
  const auto basis = hyperplane_basis(h);
  const MultiPoly s = restrict_to_span(x.poly(), basis);
  if (s.is_zero()) throw DomainError("the hyperplane is a component of the cubic");
  std::vector<MultiPoly> ds;
  for (int i = 0; i < kN - 1; ++i) ds.push_back(s.partial(i));
  const GradedIdeal js = saturate(GradedIdeal(f, kN - 1, ds));
  SliceReport out;
  out.hyperplane = h;
  if (js.is_unit()) {
    out.all_rational = true;
    return out;
  }
  const auto hd = hilbert(js);
  if (hd.dimension() != 0) throw DomainError("the slice has non-isolated singularities");
  out.scheme_degree = hd.degree();
  Rng rng(0x736c696365ULL);
  out.geometric_points = count_points(js, rng);
  for (const auto& y : rational_points(js)) {
    SlicePoint sp;
    sp.point = lift_point(y, basis);
    sp.rank = static_cast<int>(hessian_at(s, y).rank());
    const GradedIdeal away = saturate(js, GradedIdeal(f, kN - 1, point_ideal(f, y)));
    sp.milnor = static_cast<int>(out.scheme_degree - (away.is_unit() ? 0 : hilbert(away).degree()));
    if (sp.rank == 3) {
      sp.ade = sp.milnor == 1 ? AdeType::A1 : AdeType::Other;
    } else if (sp.rank == 2) {
      sp.ade = sp.milnor == 2 ? AdeType::A2 : AdeType::Ak;
    }
    sp.label = ade_label(sp.ade, sp.milnor);
    out.points.push_back(std::move(sp));
  }
  out.all_rational = static_cast<long>(out.points.size()) == out.geometric_points;
  return out;
}

SliceReport random_slice(const CubicThreefold& x, Rng& rng, int attempts) {
  const GradedIdeal j = singular_scheme(x);
  const int dim = scheme_dimension(j);
  // a generic hyperplane meets a singular curve in deg(curve) distinct points
  // and the slice has no singularities besides those
  const long expected = dim == 1 ? curve_degree_estimate(j, rng) : -1;
  for (int i = 0; i < attempts; ++i) {
    const MultiPoly h = random_linear(x.field(), kN, rng);
    try {
      if (expected >= 0 && count_points(j.add({h}), rng) != expected) continue;
      auto rep = slice_singularities(x, h);
      if (expected >= 0 && rep.geometric_points != expected) continue;
      if (rep.all_rational) return rep;
    } catch (const DomainError&) {
    }
  }
  throw SearchExhausted("no hyperplane with rational isolated slice singularities found");
}

}  // namespace pfaffcubic
