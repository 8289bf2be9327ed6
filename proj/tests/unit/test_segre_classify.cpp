#include "doctest.h"
#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/segre.hpp"
#include "support.hpp"

using namespace pfaffcubic;
using namespace testsupport;

namespace {

CubicThreefold cubic(const std::string& s, const FieldSpec& f) { return CubicThreefold::parse(s, f); }

Point pt(const FieldSpec& f, std::vector<long long> c) {
  Point p;
  for (auto v : c) p.push_back(Scalar::from_int(f, v));
  return p;
}

// Rank of the third-derivative system computed straight from the exponents.
std::size_t third_derivative_rank(const MultiPoly& f) {
  const FieldSpec& field = f.field();
  Matrix a(field, 25, 5);
  for (const auto& t : f.terms()) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        for (int k = 0; k < 5; ++k) {
          std::array<int, 5> e{};
          for (int v = 0; v < 5; ++v) e[v] = t.m.e[v];
          long long factor = 1;
          for (int v : {i, j, k}) factor *= e[v]--;
          if (factor == 0) continue;
          a(i * 5 + j, k) += t.c * Scalar::from_int(field, factor);
        }
      }
    }
  }
  return a.rank();
}

SegreReport moved_report(const CubicThreefold& x, Rng& rng) {
  const LinearChange g(rng.invertible_matrix(x.field(), 5));
  return classify(CubicThreefold(apply_change(x.form(), g)), 7);
}

}  // namespace

TEST_CASE("cone apex") {
  const FieldSpec f = F(101);
  const auto apex = cone_apex(cubic("x0^3", f));
  REQUIRE(apex.size() == 4);
  for (const auto& v : apex) CHECK(v[0].is_zero());
  CHECK(cone_apex(cubic("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", f)).empty());
  const auto secant = cubic(kSecantCubic, f);
  CHECK(third_derivative_rank(secant.poly()) == 5);
  CHECK(cone_apex(secant).empty());

  // apex points are triple points: their quadric tangent cone vanishes
  const auto cone = cubic("x0^3 + x1^3 + x2^3 + x3*x0*x1", f);
  const auto v = cone_apex(cone);
  REQUIRE(v.size() == 1);
  const auto tc = tangent_cone_at(cone, v[0]);
  CHECK(tc.q.is_zero());
  CHECK(tc.rank == 0);
  CHECK(double_point_label(tc.rank) == "triple point");
}

TEST_CASE("linear factors") {
  for (const FieldSpec& f : {F(101), FieldSpec::rationals()}) {
    const auto x = cubic("x0*(x1*x2 + x3*x4 + x0*x1)", f);
    const auto r = factor_off_linear(x);
    REQUIRE(r.status == LinearFactorization::Status::Found);
    CHECK(r.linear * r.quadric == x.poly());
    CHECK(r.linear.degree() == 1);
  }
  const FieldSpec f = F(101);
  const auto x = cubic("x0*x1*x2", f);
  const auto r = factor_off_linear(x);
  REQUIRE(r.status == LinearFactorization::Status::Found);
  CHECK(r.linear * r.quadric == x.poly());
  const MultiPoly l = r.linear.monic();
  CHECK((l == P("x0", f) || l == P("x1", f) || l == P("x2", f)));

  // Fermat over F_7: no hyperplane section of X is identically zero
  const FieldSpec f7 = F(7);
  const auto fermat = cubic("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", f7);
  CHECK(factor_off_linear(fermat).status == LinearFactorization::Status::None);
  int zero_sections = 0;
  std::vector<long long> c(5);
  for (long long code = 1; code < 16807; ++code) {
    long long rest = code;
    for (auto& ci : c) {
      ci = rest % 7;
      rest /= 7;
    }
    bool all_zero = true;
    for (long long y = 0; y < 16807 && all_zero; y += 37) {
      std::vector<long long> v(5);
      long long r2 = y, dot = 0;
      for (int i = 0; i < 5; ++i) {
        v[i] = r2 % 7;
        r2 /= 7;
        dot += v[i] * c[i];
      }
      if (dot % 7 != 0) continue;
      long long val = 0;
      for (auto vi : v) val += vi * vi * vi;
      all_zero = val % 7 == 0;
    }
    if (all_zero) ++zero_sections;
  }
  CHECK(zero_sections == 0);

  // the exhaustive scan on an integral cubic with a two-dimensional singular locus
  const auto plane7 = cubic("x0*x3^2 + x1*x4^2 + x2*x3*x4", f7);
  const auto pr = factor_off_linear(plane7);
  CHECK(pr.status == LinearFactorization::Status::None);
  CHECK(pr.method == "exhaustive hyperplane scan");
  const auto split7 = cubic("(x0 + 2*x3 + 5*x4)*(x1*x2 + x3^2 + x0*x4)", f7);
  const auto sr = factor_off_linear(split7);
  REQUIRE(sr.status == LinearFactorization::Status::Found);
  CHECK(sr.linear * sr.quadric == split7.poly());
}

TEST_CASE("singular schemes") {
  const FieldSpec f = F(101);
  CHECK(singular_scheme(cubic("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", f)).is_unit());
  const auto rnc = GradedIdeal(f, 5, rnc_quadrics(f));
  CHECK(singular_scheme(cubic(kSecantCubic, f)).equals(rnc));

  // first-type line: the one-dimensional part is the line; three nodes lie off it
  const auto x = cubic(normal_form_cases()[0].cubic, f);
  const auto j = singular_scheme(x);
  const GradedIdeal line(f, 5, {P("x0", f), P("x1", f), P("x2", f)});
  CHECK(line.contains(j));
  CHECK(hilbert(j).dimension() == 1);
  CHECK(hilbert(j).degree() == 1);
  const auto off = saturate(j, line);
  Rng rng(2);
  CHECK(hilbert(off).dimension() == 0);
  CHECK(count_points(off, rng) == 3);
}

TEST_CASE("tangent cones") {
  const FieldSpec f = F(101);
  const auto node = cubic("x0*(x1*x2 + x3*x4) + x1^3", f);
  const auto tc = tangent_cone_at(node, pt(f, {1, 0, 0, 0, 0}));
  CHECK(tc.rank == 4);
  CHECK(tc.q == P("x1*x2 + x3*x4", f));
  CHECK(tc.c == P("x1^3", f));
  CHECK(double_point_label(4) == "conic node");
  CHECK_THROWS_AS(tangent_cone_at(node, pt(f, {1, 0, 1, 0, 0})), DomainError);
  CHECK_THROWS_AS(tangent_cone_at(node, pt(f, {1, 1, 0, 0, 0})), DomainError);

  // along the first-type line the cone is a t0*q3 + t1*q4 with
  // det of its Gram matrix -(t0^3 + t1^3)/4 on x0, x1, x2
  const auto line1 = cubic(normal_form_cases()[0].cubic, f);
  for (long long a = 0; a < 101; ++a) {
    const auto data = tangent_cone_at(line1, pt(f, {0, 0, 0, a, 1}));
    const bool full = !(Scalar::from_int(f, a).pow(3) + Scalar::one(f)).is_zero();
    CHECK(data.rank == (full ? 3 : 2));
    CHECK(double_point_label(data.rank) == (full ? "conic node" : "binode"));
  }
  const auto line2 = cubic(normal_form_cases()[1].cubic, f);
  for (long long a = 0; a < 20; ++a) CHECK(tangent_cone_at(line2, pt(f, {0, 0, 0, a, 1})).rank <= 2);

  // the move sends the point to [1:0:0:0:0]
  const Point p = pt(f, {0, 0, 0, 3, 1});
  const auto moved = tangent_cone_at(line1, p);
  CHECK(normalize_point(moved.change.to_original(pt(f, {1, 0, 0, 0, 0}))) == normalize_point(p));
  const MultiPoly x0 = MultiPoly::variable(f, 5, 0);
  CHECK(apply_change(line1.poly(), moved.change) == x0 * moved.q + moved.c);
}

TEST_CASE("double curve type") {
  const FieldSpec f = F(101);
  Rng rng(4);
  const GradedIdeal line(f, 5, {P("x0", f), P("x1", f), P("x2", f)});
  const auto first = double_curve_type(cubic(normal_form_cases()[0].cubic, f), line, rng);
  CHECK(first.type == CurveType::First);
  CHECK(first.samples.size() >= 8);
  for (int r : first.ranks) CHECK(r <= 3);

  for (const char* s : {"x4*x0*x1 + x2^3 + x0^2*x2 + x1^3 + x0^3", normal_form_cases()[1].cubic}) {
    const auto second = double_curve_type(cubic(s, f), line, rng);
    CHECK(second.type == CurveType::Second);
    for (int r : second.ranks) CHECK(r <= 2);
  }

  const auto quartic = double_curve_type(cubic(kSecantCubic, f), GradedIdeal(f, 5, rnc_quadrics(f)), rng);
  CHECK(quartic.type == CurveType::First);
  CHECK_THROWS_AS(double_curve_type(cubic(kSecantCubic, f), GradedIdeal(f, 5, {P("x0", f)}), rng), DomainError);
}

TEST_CASE("classification of the basic kinds") {
  const FieldSpec f = F(101);
  CHECK(classify(cubic("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", f)).kind == SegreKind::Smooth);

  const auto secant = classify(cubic(kSecantCubic, f));
  CHECK(secant.kind == SegreKind::DoubleCurve);
  CHECK(secant.curve_kind == CurveKind::RationalQuartic);
  CHECK(secant.type == CurveType::First);
  CHECK(GradedIdeal(f, 5, secant.curve_ideal).equals(GradedIdeal(f, 5, rnc_quadrics(f))));
  CHECK(secant.extra_points == 0);

  const auto plane = classify(cubic("x0*x3^2 + x1*x4^2 + x2*x3*x4", f));
  CHECK(plane.kind == SegreKind::NonNormalPlane);
  CHECK(GradedIdeal(f, 5, plane.plane_ideal).equals(GradedIdeal(f, 5, {P("x3", f), P("x4", f)})));

  const auto cone = classify(cubic("x0^3 + x1^3 + x2^3 + x3^3", f));
  CHECK(cone.kind == SegreKind::Cone);
  CHECK(cone.apex.size() == 1);

  const auto split = classify(cubic("x0*(x1*x2 + x3*x4 + x0*x1)", f));
  CHECK(split.kind == SegreKind::NonIntegral);
  REQUIRE(split.factors.has_value());
  CHECK(split.factors->linear * split.factors->quadric == P("x0*(x1*x2 + x3*x4 + x0*x1)", f));

  const auto node = classify(cubic("x4*(x0*x1 + x2*x3) + x0^3 + 2*x1^3 - x2^3 + 3*x3^3 + x0*x1*x2", f));
  CHECK(node.kind == SegreKind::IsolatedDoublePoints);
  CHECK(node.geometric_points == 1);
  REQUIRE(node.points.size() == 1);
  CHECK(node.points[0].point == pt(f, {0, 0, 0, 0, 1}));
  CHECK(node.points[0].rank == 4);

  const auto overq = classify(cubic(kSecantCubic, FieldSpec::rationals()));
  CHECK(overq.kind == SegreKind::DoubleCurve);
  CHECK(overq.curve_kind == CurveKind::RationalQuartic);
  CHECK(overq.reduced_modulo != 0);
}

TEST_CASE("normal forms singular along curves") {
  const FieldSpec f = F(101);
  for (const auto& nf : normal_form_cases()) {
    CAPTURE(nf.name);
    const auto x = cubic(nf.cubic, f);
    const auto r = classify(x);
    REQUIRE(r.kind == SegreKind::DoubleCurve);
    CHECK(to_string(*r.curve_kind) == nf.curve_kind);
    CHECK(static_cast<int>(*r.type) == nf.type);
    CHECK(r.curve_degree == nf.degree);
    const GradedIdeal curve(f, 5, r.curve_ideal);
    CHECK(hilbert(curve).degree() == nf.degree);
    // the reduced curve is contained in Sing(X)
    CHECK(curve.contains(GradedIdeal(f, 5, as_polys(partials(x.form())))));

    Rng rng(11);
    const auto s = random_slice(x, rng);
    CHECK(s.geometric_points == nf.degree);
    CHECK(s.scheme_degree == nf.degree * nf.slice_milnor);
    for (const auto& p : s.points) {
      CHECK(p.milnor == nf.slice_milnor);
      CHECK(p.label == "A" + std::to_string(nf.slice_milnor));
      CHECK(x.poly().evaluate(p.point).is_zero());
      CHECK(s.hyperplane.evaluate(p.point).is_zero());
    }
  }
}

TEST_CASE("classification is invariant under coordinate changes") {
  const FieldSpec f = F(101);
  Rng rng(21);
  std::vector<std::string> inputs = {"x0*x3^2 + x1*x4^2 + x2*x3*x4", "x0^3 + x1^3 + x2^3 + x3^3",
                                     "x0*(x1*x2 + x3*x4 + x0*x1)"};
  for (const auto& nf : normal_form_cases()) inputs.push_back(nf.cubic);
  for (const auto& s : inputs) {
    CAPTURE(s);
    const auto x = cubic(s, f);
    const auto a = classify(x);
    const auto b = moved_report(x, rng);
    CHECK(a.kind == b.kind);
    CHECK(a.curve_kind == b.curve_kind);
    CHECK(a.type == b.type);
    CHECK(a.curve_degree == b.curve_degree);
    CHECK(a.extra_points == b.extra_points);
  }
}

TEST_CASE("slice errors") {
  const FieldSpec f = F(101);
  const auto plane = cubic("x0*x3^2 + x1*x4^2 + x2*x3*x4", f);
  CHECK_THROWS_AS(slice_singularities(plane, P("x0 + 2*x1 + 3*x2 + 5*x3 + 7*x4", f)), DomainError);
  CHECK_THROWS_AS(slice_singularities(cubic("x0*x1*x2", f), P("x0", f)), DomainError);
  const auto smooth = slice_singularities(cubic("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", f), P("x4", f));
  CHECK(smooth.points.empty());
  CHECK(smooth.scheme_degree == 0);
}
