#include "pfaffcubic/pfaffianize.hpp"

#include <algorithm>

#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/linear_change.hpp"
#include "pfaffcubic/quadric.hpp"
#include "pfaffcubic/univariate.hpp"

namespace pfaffcubic {

namespace {

constexpr int kN = 5;

std::string point_text(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].to_string();
  }
  return s + ")";
}

std::vector<std::string> texts(const std::vector<MultiPoly>& forms) {
  std::vector<std::string> out;
  for (const auto& f : forms) out.push_back(f.to_string());
  return out;
}

std::vector<std::string> matrix_rows(const PolyMatrix& m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) row += "; ";
      row += m(i, j).is_zero() ? "0" : m(i, j).to_string();
    }
    out.push_back(row);
  }
  return out;
}

Matrix coordinate_rows(const std::vector<MultiPoly>& forms, const std::vector<Monomial>& basis) {
  const FieldSpec& f = forms.front().field();
  Matrix m(f, forms.size(), basis.size());
  for (std::size_t r = 0; r < forms.size(); ++r) {
    const auto c = coordinates(forms[r], basis);
    for (std::size_t k = 0; k < basis.size(); ++k) m(r, k) = c[k];
  }
  return m;
}

bool same_span(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  const auto basis = monomials_of_degree(a.front().nvars(), a.front().degree());
  std::vector<MultiPoly> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = coordinate_rows(a, basis).rank();
  return ra == coordinate_rows(b, basis).rank() && ra == coordinate_rows(both, basis).rank();
}

std::vector<Scalar> linear_part(const MultiPoly& l) {
  if (l.is_zero()) return std::vector<Scalar>(l.nvars(), Scalar::zero(l.field()));
  return linear_coefficients(l);
}

PolyMatrix scale_last(const PolyMatrix& m, const Scalar& s) {
  PolyMatrix out = m;
  const std::size_t last = m.rows() - 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out(i, last) = s * m(i, last);
    out(last, i) = s * m(last, i);
  }
  return out;
}

// Verifies Pf(M) = lambda F, rescales the last row and column so lambda = 1
// and records the check.
void seal(PfaffianCertificate& cert) {
  VerifyResult v = verify(cert.matrix, cert.cubic);
  if (!v.ok) throw VerificationFailure("Pf(M) is not a multiple of F for strategy " + to_string(cert.strategy));
  if (!v.lambda.is_one()) {
    cert.matrix = SkewLinearMatrix(scale_last(cert.matrix.matrix(), v.lambda.inverse()));
    v = verify(cert.matrix, cert.cubic);
    if (!v.ok || !v.lambda.is_one()) throw VerificationFailure("rescaling did not normalize lambda");
  }
  cert.lambda = v.lambda;
  cert.checks.insert(cert.checks.begin(), {"pf_equals_lambda_f", true});
  cert.verified = true;
}

// Smallest a/b with a = b r (mod p) and |a|, b below sqrt(p/2).
std::optional<mpq_class> rational_reconstruction(std::uint32_t r, std::uint32_t p) {
  mpz_class r0 = p, r1 = r, t0 = 0, t1 = 1;
  const mpz_class bound = sqrt(mpz_class(p / 2));
  while (r1 > bound) {
    const mpz_class q = r0 / r1;
    mpz_class tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

// Lifts linear forms computed modulo p back to Q, after bringing them to
// reduced row echelon form so the entries are small.
std::optional<std::vector<MultiPoly>> lift_linear_forms(const std::vector<MultiPoly>& forms) {
  const FieldSpec& fp = forms.front().field();
  Matrix m(fp, forms.size(), kN);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    const auto c = linear_part(forms[r]);
    for (int k = 0; k < kN; ++k) m(r, k) = c[k];
  }
  m.rref();
  std::vector<MultiPoly> out;
  const FieldSpec q = FieldSpec::rationals();
  for (std::size_t r = 0; r < forms.size(); ++r) {
    std::vector<Scalar> c;
    for (int k = 0; k < kN; ++k) {
      const auto v = rational_reconstruction(m(r, k).residue(), static_cast<std::uint32_t>(fp.characteristic()));
      if (!v) return std::nullopt;
      c.push_back(Scalar::from_rational(q, *v));
    }
    out.push_back(linear_form(q, c));
  }
  return out;
}

std::vector<Point> points_on_surface(const MultiPoly& g, Rng& rng) {
  const FieldSpec& f = g.field();
  std::vector<Point> out;
  if (f.characteristic() <= kMaxSearchPrime) {
    const std::uint64_t p = f.characteristic();
    for (int lead = 0; lead < 4; ++lead) {
      std::uint64_t total = 1;
      for (int i = lead + 1; i < 4; ++i) total *= p;
      for (std::uint64_t code = 0; code < total; ++code) {
        Point x(4, Scalar::zero(f));
        x[lead] = Scalar::one(f);
        std::uint64_t rest = code;
        for (int i = lead + 1; i < 4; ++i) {
          x[i] = Scalar::from_int(f, static_cast<long long>(rest % p));
          rest /= p;
        }
        if (g.evaluate(x).is_zero()) out.push_back(std::move(x));
      }
    }
    return out;
  }
  // rational roots along random lines
  const FieldSpec& field = f;
  for (int tries = 0; tries < 400 && out.size() < 200; ++tries) {
    const auto a = rng.vector(field, 4), b = rng.vector(field, 4);
    std::vector<MultiPoly> images;
    for (int i = 0; i < 4; ++i) {
      images.push_back(MultiPoly::constant(field, 1, a[i]) + b[i] * MultiPoly::variable(field, 1, 0));
    }
    const MultiPoly r = g.substitute(images);
    std::vector<Scalar> coeffs(4, Scalar::zero(field));
    for (const auto& t : r.terms()) coeffs[t.m.e[0]] = t.c;
    const UniPoly u(field, coeffs);
    if (u.is_zero()) continue;
    for (const auto& t : roots(u)) {
      Point x(4);
      for (int i = 0; i < 4; ++i) x[i] = a[i] + t * b[i];
      if (!is_zero_vector(x)) out.push_back(normalize_point(x));
    }
  }
  return out;
}

// Five points with every four of them independent, greedily in a shuffled order.
std::optional<std::vector<Point>> general_five(const FieldSpec& f, std::vector<Point> pts, Rng& rng) {
  for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng.below(i)]);
  std::vector<Point> chosen;
  for (const auto& cand : pts) {
    bool ok = true;
    const std::size_t n = chosen.size();
    for (std::uint32_t mask = 0; mask < (1u << n) && ok; ++mask) {
      if (__builtin_popcount(mask) > 3) continue;
      std::vector<std::vector<Scalar>> rows = {cand};
      for (std::size_t k = 0; k < n; ++k) {
        if (mask & (1u << k)) rows.push_back(chosen[k]);
      }
      ok = Matrix::from_rows(f, rows).rank() == rows.size();
    }
    if (ok) chosen.push_back(cand);
    if (chosen.size() == 5) return chosen;
  }
  return std::nullopt;
}

// Rational points of the curve cut out by random hyperplanes.
std::vector<Point> curve_points(const GradedIdeal& c, Rng& rng, std::size_t want) {
  std::vector<Point> out;
  for (int tries = 0; tries < 40 && out.size() < want; ++tries) {
    try {
      for (const auto& p : rational_points(c.add({linear_form(c.field(), rng.vector(c.field(), kN))}))) {
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
      }
    } catch (const DomainError&) {
    }
  }
  return out;
}

}  // namespace

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Quintic:
      return "Quintic";
    case Strategy::ConeBase:
      return "ConeBase";
    case Strategy::DoublePlane:
      return "DoublePlane";
    case Strategy::NonIntegral:
      return "NonIntegral";
  }
  return "?";
}

SkewLinearMatrix be_matrix(const std::vector<MultiPoly>& quadrics) {
  if (quadrics.size() != 5) throw DomainError("be_matrix needs 5 quadrics, got " + std::to_string(quadrics.size()));
  const FieldSpec& f = quadrics.front().field();
  const int n = quadrics.front().nvars();
  for (const auto& q : quadrics) {
    if (q.is_zero() || !q.is_homogeneous() || q.degree() != 2) throw DomainError("be_matrix needs quadratic forms");
  }
  const auto syz = linear_syzygies(quadrics);
  if (syz.size() != 5) {
    throw DomainError("expected a 5-dimensional space of linear syzygies, found " + std::to_string(syz.size()));
  }
  // s[k][j][v]: coefficient of x_v in entry j of syzygy k
  std::vector<std::vector<std::vector<Scalar>>> s(5);
  for (int k = 0; k < 5; ++k) {
    for (int j = 0; j < 5; ++j) s[k].push_back(linear_part(syz[k][j]));
  }
  // B S skew for a constant B: (BS)_ij + (BS)_ji = 0, unknowns B(i, k) at 5i + k
  Matrix a(f, 15 * n, 25);
  std::size_t row = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i; j < 5; ++j) {
      for (int v = 0; v < n; ++v, ++row) {
        for (int k = 0; k < 5; ++k) {
          a(row, 5 * i + k) += s[k][j][v];
          a(row, 5 * j + k) += s[k][i][v];
        }
      }
    }
  }
  const auto kernel = a.kernel();
  PolyMatrix raw(f, n, 5, 5);
  for (int k = 0; k < 5; ++k) {
    for (int j = 0; j < 5; ++j) raw(k, j) = syz[k][j];
  }
  if (kernel.empty()) throw DomainError("the syzygy matrix cannot be made skew:\n" + raw.to_text());
  std::vector<std::vector<Scalar>> candidates = kernel;
  if (kernel.size() > 1) {
    std::vector<Scalar> sum(25, Scalar::zero(f));
    for (const auto& v : kernel) {
      for (int t = 0; t < 25; ++t) sum[t] += v[t];
    }
    candidates.push_back(sum);
    Rng rng(0x6265ULL);
    for (int t = 0; t < 20; ++t) {
      std::vector<Scalar> c(25, Scalar::zero(f));
      for (const auto& v : kernel) {
        const Scalar w = rng.scalar(f);
        for (int u = 0; u < 25; ++u) c[u] += w * v[u];
      }
      candidates.push_back(c);
    }
  }
  for (const auto& cand : candidates) {
    Matrix b(f, 5, 5);
    for (int i = 0; i < 5; ++i) {
      for (int k = 0; k < 5; ++k) b(i, k) = cand[5 * i + k];
    }
    if (b.rank() != 5) continue;
    const PolyMatrix nm = PolyMatrix::from_constants(b, n) * raw;
    const SkewLinearMatrix out(nm);
    const auto p = pfaffian_complements(out);
    if (std::any_of(p.begin(), p.end(), [](const MultiPoly& x) { return x.is_zero(); })) continue;
    if (!same_span(p, quadrics)) throw DomainError("complementary Pfaffians do not span the quadrics");
    return out;
  }
  throw DomainError("no invertible change makes the syzygy matrix skew:\n" + raw.to_text());
}

std::vector<MultiPoly> express_in_quadrics(const MultiPoly& f, const std::vector<MultiPoly>& quadrics) {
  const FieldSpec& field = f.field();
  const int n = f.nvars();
  const int d = f.degree();
  for (const auto& q : quadrics) {
    if (q.degree() != d - 1) throw DomainError("express_in_quadrics needs linear cofactors");
  }
  const auto rows = monomials_of_degree(n, d);
  std::vector<MultiPoly> cols;
  for (const auto& q : quadrics) {
    for (int k = 0; k < n; ++k) cols.push_back(q * MultiPoly::variable(field, n, k));
  }
  Matrix a(field, rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto v = coordinates(cols[c], rows);
    for (std::size_t r = 0; r < rows.size(); ++r) a(r, c) = v[r];
  }
  const auto sol = a.solve(coordinates(f, rows));
  if (!sol) throw DomainError("the form is not in the ideal of the quadrics");
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < quadrics.size(); ++i) {
    out.push_back(linear_form(field, std::vector<Scalar>(sol->begin() + i * n, sol->begin() + (i + 1) * n)));
  }
  MultiPoly check(field, n);
  for (std::size_t i = 0; i < quadrics.size(); ++i) check += out[i] * quadrics[i];
  if (!(check == f)) throw VerificationFailure("cofactor identity does not re-expand");
  return out;
}

SkewLinearMatrix border(const SkewLinearMatrix& n, const std::vector<MultiPoly>& c) {
  if (c.size() != n.size()) throw DomainError("border needs one form per row");
  const PolyMatrix& a = n.matrix();
  const std::size_t s = n.size();
  PolyMatrix m(a.field(), a.nvars(), s + 1, s + 1);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) m(i, j) = a(i, j);
    m(i, s) = c[i];
    m(s, i) = -c[i];
  }
  return SkewLinearMatrix(m);
}

VerifyResult verify(const SkewLinearMatrix& m, const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("verify needs a nonzero form");
  VerifyResult out;
  out.pfaffian = pfaffian(m.matrix());
  const auto& lead = f.leading();
  out.lambda = out.pfaffian.coefficient(lead.m) / lead.c;
  out.ok = !out.lambda.is_zero() && out.pfaffian == out.lambda * f;
  return out;
}

QuinticCertificate quintic_certificate(const GradedIdeal& curve, int d_max) {
  QuinticCertificate out;
  out.curve = curve;
  const auto hd = hilbert(curve, d_max);
  out.hp_5m = hd.polynomial_string() == "5*m";
  out.nondegenerate = curve.degree_piece(1).empty();
  out.quadrics = curve.degree_piece(2);
  if (out.quadrics.size() != 5) return out;
  try {
    out.n = be_matrix(out.quadrics);
  } catch (const DomainError&) {
    return out;
  }
  // the complements generate the whole ideal, not only its quadrics
  const GradedIdeal back(curve.field(), curve.nvars(), pfaffian_complements(out.n));
  out.be_roundtrip = back.equals(curve);
  return out;
}

PfaffianCertificate pfaffian_double_plane(const CubicThreefold& x, const std::vector<MultiPoly>& plane) {
  if (plane.size() != 2) throw DomainError("a plane in P^4 is cut out by two linear forms");
  const FieldSpec& f = x.field();
  const MultiPoly& u = plane[0];
  const MultiPoly& v = plane[1];
  const auto abc = express_in_quadrics(x.poly(), {u * u, u * v, v * v});
  const MultiPoly& a = abc[0];
  const MultiPoly& b = abc[1];
  const MultiPoly& c = abc[2];
  // template with x3 -> u, x4 -> v, x0 -> a, x1 -> c, x2 -> b
  PolyMatrix m(f, kN, 6, 6);
  auto put = [&](std::size_t i, std::size_t j, const MultiPoly& l) {
    m(i, j) = l;
    m(j, i) = -l;
  };
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = MultiPoly(f, kN);
  }
  put(0, 1, u);
  put(0, 2, v);
  put(0, 5, b);
  put(1, 4, v);
  put(2, 3, u);
  put(3, 5, c);
  put(4, 5, a);
  PfaffianCertificate cert;
  cert.field = f;
  cert.cubic = x.poly();
  cert.strategy = Strategy::DoublePlane;
  cert.matrix = SkewLinearMatrix(m);
  cert.witnesses = {{"plane", texts(plane)}, {"square_coefficients", texts({a, b, c})}};
  seal(cert);
  return cert;
}

PfaffianCertificate pfaffian_non_integral(const MultiPoly& l, const MultiPoly& q) {
  const FieldSpec& f = l.field();
  if (l.degree() != 1 || q.degree() != 2) throw DomainError("expected a linear form and a quadric");
  const auto products = quadric_split(q).as_products();
  if (products.size() > 3) {
    throw FieldLimitation("the quadric needs " + std::to_string(products.size()) +
                          " products over " + f.name() + "; a 4x4 Pfaffian has 3");
  }
  PolyMatrix m(f, kN, 6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = MultiPoly(f, kN);
  }
  auto put = [&](std::size_t i, std::size_t j, const MultiPoly& e) {
    m(i, j) = e;
    m(j, i) = -e;
  };
  // Pf of the 4x4 block = m01 m23 - m02 m13 + m03 m12
  if (products.size() > 0) {
    put(0, 1, products[0].first);
    put(2, 3, products[0].second);
  }
  if (products.size() > 1) {
    put(0, 2, products[1].first);
    put(1, 3, -products[1].second);
  }
  if (products.size() > 2) {
    put(0, 3, products[2].first);
    put(1, 2, products[2].second);
  }
  put(4, 5, l);
  PfaffianCertificate cert;
  cert.field = f;
  cert.cubic = l * q;
  cert.strategy = Strategy::NonIntegral;
  cert.matrix = SkewLinearMatrix(m);
  PolyMatrix mq(f, kN, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) mq(i, j) = m(i, j);
  }
  if (!(pfaffian(mq) == q)) throw VerificationFailure("Pf(M_Q) differs from Q");
  cert.witnesses = {{"linear_factor", {l.to_string()}}, {"quadric", {q.to_string()}}, {"quadric_matrix", matrix_rows(mq)}};
  cert.checks.push_back({"pf_of_quadric_block", true});
  seal(cert);
  return cert;
}

PfaffianCertificate pfaffian_cone(const CubicThreefold& x, const std::vector<Point>& apex, std::uint64_t seed) {
  const FieldSpec& f = x.field();
  if (!f.is_prime_field()) throw FieldLimitation("the point search on the base of a cone needs F_p");
  const std::size_t k = apex.size();
  if (k == 0) throw DomainError("a cone needs a nonempty apex");
  if (k > 2) throw FieldLimitation("the base is a binary cubic with no linear factor over " + f.name());
  // basis: standard vectors completing the apex, then the apex
  std::vector<Point> rows;
  for (int i = 0; i < kN && rows.size() + k < kN; ++i) {
    Point e(kN, Scalar::zero(f));
    e[i] = Scalar::one(f);
    std::vector<Point> trial = rows;
    trial.push_back(e);
    trial.insert(trial.end(), apex.begin(), apex.end());
    if (Matrix::from_rows(f, trial).rank() == trial.size()) rows.push_back(e);
  }
  rows.insert(rows.end(), apex.begin(), apex.end());
  const LinearChange change(Matrix::from_rows(f, rows));
  const MultiPoly g = apply_change(x.poly(), change);
  for (int i = kN - static_cast<int>(k); i < kN; ++i) {
    if (!g.partial(i).is_zero()) throw VerificationFailure("the cubic depends on an apex direction");
  }
  const MultiPoly base = g.with_nvars(4);
  Rng rng(seed);
  const auto pts = points_on_surface(base, rng);
  const auto five = general_five(f, pts, rng);
  if (!five) throw SearchExhausted("no five points in general position on the base over " + f.name());
  const auto quadrics = forms_vanishing_at(f, 4, *five, 2);
  const GradedIdeal ideal(f, 4, quadrics);
  const auto hd = hilbert(ideal);
  const bool pattern = quadrics.size() == 5 && hd.dimension() == 0 && hd.degree() == 5 && hd.values.size() > 3 &&
                       hd.values[0] == 1 && hd.values[1] == 4 && hd.values[2] == 5 && hd.values[3] == 5;
  if (!pattern) throw VerificationFailure("five general points do not have Hilbert function (1,4,5,5,...)");
  const SkewLinearMatrix n = be_matrix(quadrics);
  const auto c = express_in_quadrics(base, pfaffian_complements(n));
  const SkewLinearMatrix m4 = border(n, c);
  // back to the original coordinates
  const LinearChange back = change.inverse();
  PolyMatrix m(f, kN, 6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = apply_change(m4(i, j).with_nvars(kN), back);
  }
  PfaffianCertificate cert;
  cert.field = f;
  cert.cubic = x.poly();
  cert.strategy = Strategy::ConeBase;
  cert.matrix = SkewLinearMatrix(m);
  cert.seed = seed;
  std::vector<std::string> apex_text, base_points, change_rows;
  for (const auto& p : apex) apex_text.push_back(point_text(p));
  for (const auto& p : *five) base_points.push_back(point_text(p));
  for (const auto& r : rows) change_rows.push_back(point_text(r));
  cert.witnesses = {{"apex", apex_text},
                    {"base_coordinates", change_rows},
                    {"base_cubic", {base.to_string()}},
                    {"base_points", base_points},
                    {"point_quadrics", texts(quadrics)},
                    {"base_matrix", matrix_rows(n.matrix())}};
  cert.checks.push_back({"five_point_hilbert_function", pattern});
  seal(cert);
  return cert;
}

PfaffianCertificate pfaffian_quintic(const CubicThreefold& x, std::uint64_t seed, int retries, int d_max, int jobs) {
  const FieldSpec& f = x.field();
  const QuinticResult r = forge_quintic(x, seed, retries, d_max, jobs);
  const QuinticCertificate qc = quintic_certificate(r.curve, d_max);
  if (!qc.hp_5m || !qc.nondegenerate || !qc.be_roundtrip) {
    throw SearchExhausted("the residual curve is not an AG elliptic quintic");
  }
  const auto p = pfaffian_complements(qc.n);
  const auto c = express_in_quadrics(x.poly(), p);
  PfaffianCertificate cert;
  cert.field = f;
  cert.cubic = x.poly();
  cert.strategy = Strategy::Quintic;
  cert.matrix = border(qc.n, c);
  cert.seed = seed;
  cert.attempts = r.attempts;
  const auto& w = r.quartic;
  const auto& sw = r.scroll;
  std::vector<MultiPoly> conic = w.conic_plane;
  conic.push_back(w.conic);
  cert.witnesses = {{"hyperplane", {w.hyperplane.to_string()}},
                    {"line", {point_text(w.l.a), point_text(w.l.b)}},
                    {"line_leaving_hyperplane", {point_text(w.l_prime.a), point_text(w.l_prime.b)}},
                    {"conic", texts(conic)},
                    {"attachment_points", {point_text(w.x1), point_text(w.x2)}},
                    {"scroll_anchors",
                     {point_text(sw.x1), point_text(sw.x2), point_text(sw.x3), point_text(sw.y1), point_text(sw.y2),
                      point_text(sw.y3)}},
                    {"scroll", texts(sw.ideal.generators())},
                    {"quintic", texts(qc.quadrics)},
                    {"quintic_matrix", matrix_rows(qc.n.matrix())},
                    {"border", texts(c)}};
  cert.checks.push_back({"hp_5m", qc.hp_5m});
  cert.checks.push_back({"nondegenerate", qc.nondegenerate});
  cert.checks.push_back({"be_roundtrip", qc.be_roundtrip});
  seal(cert);

  // rank 6 off X; rank at most 4 at points of the curve
  Rng rng(seed ^ 0x72616e6bULL);
  bool off = true;
  int sampled = 0;
  for (int t = 0; t < 200 && sampled < 20; ++t) {
    const auto pt = rng.vector(f, kN);
    if (x.poly().evaluate(pt).is_zero()) continue;
    ++sampled;
    off = off && cert.matrix.matrix().evaluate(pt).rank() == 6;
  }
  cert.checks.push_back({"rank_6_off_cubic", off && sampled == 20});
  bool on = true;
  const auto cp = curve_points(r.curve, rng, 5);
  for (const auto& pt : cp) on = on && cert.matrix.matrix().evaluate(pt).rank() <= 4;
  cert.checks.push_back({"rank_at_most_4_on_curve", on && !cp.empty()});
  return cert;
}

PfaffianCertificate pfaffianize(const CubicThreefold& x, const PfaffianizeOptions& options) {
  const FieldSpec& f = x.field();
  const SegreReport rep = classify(x, options.seed, options.d_max);
  PfaffianCertificate cert;
  switch (rep.kind) {
    case SegreKind::NonIntegral:
      cert = pfaffian_non_integral(rep.factors->linear, rep.factors->quadric);
      break;
    case SegreKind::NonNormalPlane: {
      std::vector<MultiPoly> plane = rep.plane_ideal;
      if (rep.reduced_modulo) {
        auto lifted = lift_linear_forms(plane);
        if (!lifted) throw FieldLimitation("could not lift the double plane from F_" + std::to_string(rep.reduced_modulo));
        plane = *lifted;
      }
      try {
        cert = pfaffian_double_plane(x, plane);
      } catch (const DomainError&) {
        if (!rep.reduced_modulo) throw;
        throw FieldLimitation("the double plane found modulo " + std::to_string(rep.reduced_modulo) +
                              " does not lift to Q");
      }
      break;
    }
    case SegreKind::Cone:
      if (!f.is_prime_field()) throw FieldLimitation("cones are handled over F_p only; rerun with --field p:<prime>");
      cert = pfaffian_cone(x, rep.apex, options.seed);
      break;
    case SegreKind::Smooth:
    case SegreKind::IsolatedDoublePoints:
    case SegreKind::DoubleCurve:
      if (!f.is_prime_field() || f.characteristic() > kMaxSearchPrime) {
        throw FieldLimitation("the quintic construction searches F_p with p <= 31, got " + f.name());
      }
      cert = pfaffian_quintic(x, options.seed, options.retries, options.d_max, options.jobs);
      break;
  }
  cert.seed = options.seed;
  return cert;
}

std::vector<std::uint32_t> retry_ladder(std::uint32_t start) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p : {11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    if (p > start) out.push_back(p);
  }
  return out;
}

PfaffianCertificate pfaffianize_text(const std::string& text, const FieldSpec& field, const PfaffianizeOptions& options) {
  std::vector<FieldSpec> fields = {field};
  if (field.is_prime_field()) {
    for (auto p : retry_ladder(static_cast<std::uint32_t>(field.characteristic()))) fields.push_back(FieldSpec::prime(p));
  }
  std::string last;
  int attempts = 0;
  for (const auto& f : fields) {
    try {
      PfaffianCertificate cert = pfaffianize(CubicThreefold::parse(text, f), options);
      cert.attempts += attempts;
      return cert;
    } catch (const SearchExhausted& e) {
      last = e.what();
      attempts += options.retries;
    }
  }
  throw SearchExhausted("search exhausted on every field of the ladder; last: " + last);
}

}  // namespace pfaffcubic
