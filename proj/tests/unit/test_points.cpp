#include "doctest.h"
#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/points.hpp"
#include "pfaffcubic/univariate.hpp"
#include "support.hpp"

using namespace pfaffcubic;
using namespace testsupport;

namespace {

UniPoly U(const FieldSpec& f, std::vector<long long> c) {
  std::vector<Scalar> s;
  for (auto v : c) s.push_back(Scalar::from_int(f, v));
  return UniPoly(f, s);
}

Point pt(const FieldSpec& f, std::vector<long long> c) {
  Point p;
  for (auto v : c) p.push_back(Scalar::from_int(f, v));
  return p;
}

}  // namespace

TEST_CASE("univariate roots and radicals") {
  const FieldSpec f = F(103);  // -1 is not a square mod 103
  const UniPoly t3 = UniPoly::linear_root(f, Scalar::from_int(f, 3));
  const UniPoly t5 = UniPoly::linear_root(f, Scalar::from_int(f, 5));
  const UniPoly irr = U(f, {1, 0, 1});
  const UniPoly g = t3 * t5 * t5 * irr;
  CHECK(radical(g) == (t3 * t5 * irr).monic());
  const auto r = roots(g);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Scalar::from_int(f, 3));
  CHECK(r[1] == Scalar::from_int(f, 5));
  CHECK(roots(irr).empty());

  // a p-th power has zero derivative
  const FieldSpec f13 = F(13);
  UniPoly p13 = UniPoly::constant(f13, Scalar::one(f13));
  for (int i = 0; i < 13; ++i) p13 = p13 * UniPoly::linear_root(f13, Scalar::from_int(f13, 2));
  CHECK(p13.derivative().is_zero());
  CHECK(radical(p13) == UniPoly::linear_root(f13, Scalar::from_int(f13, 2)));

  // roots against brute force over F_101
  Rng rng(3);
  const FieldSpec f101 = F(101);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Scalar> c;
    for (int i = 0; i < 7; ++i) c.push_back(rng.scalar(f101, 100));
    c.push_back(Scalar::one(f101));
    const UniPoly h(f101, c);
    std::vector<Scalar> brute;
    for (int a = 0; a < 101; ++a) {
      if (h.evaluate(Scalar::from_int(f101, a)).is_zero()) brute.push_back(Scalar::from_int(f101, a));
    }
    CHECK(roots(h) == brute);
  }

  const FieldSpec q = FieldSpec::rationals();
  // (2t - 3)(t + 4)(t^2 + 2)
  const UniPoly qq = U(q, {-3, 2}) * U(q, {4, 1}) * U(q, {2, 0, 1});
  const auto qr = roots(qq);
  REQUIRE(qr.size() == 2);
  CHECK(qr[0] == Scalar::from_int(q, -4));
  CHECK(qr[1] == Scalar::from_rational(q, mpq_class(3, 2)));
}

TEST_CASE("rational points of finite schemes") {
  const FieldSpec f = F(103);
  // three points on the line x2 = x3 = x4 = 0 and one at infinity of the chart x0 = 1
  const std::vector<Point> pts = {pt(f, {1, 2, 0, 0, 0}), pt(f, {1, 7, 0, 0, 0}), pt(f, {0, 1, 0, 0, 0}),
                                  pt(f, {1, 1, 1, 1, 1})};
  GradedIdeal acc = GradedIdeal::unit(f, 5);
  for (const auto& p : pts) acc = intersect(acc, GradedIdeal(f, 5, point_ideal(f, p)));
  auto found = rational_points(acc);
  CHECK(found.size() == 4);
  for (const auto& p : pts) CHECK(std::find(found.begin(), found.end(), normalize_point(p)) != found.end());
  Rng rng(1);
  CHECK(count_points(acc, rng) == 4);

  // a conjugate pair: x0^2 + x1^2 = x2 = x3 = x4 = 0 has no rational points but two geometric ones
  const GradedIdeal pair(f, 5, {P("x0^2 + x1^2", f), P("x2", f), P("x3", f), P("x4", f)});
  CHECK(rational_points(pair).empty());
  CHECK(count_points(pair, rng) == 2);

  // a fat point counts once
  const GradedIdeal fat(f, 5, {P("x1^2", f), P("x2", f), P("x3^2", f), P("x1*x3", f), P("x4", f)});
  CHECK(rational_points(fat).size() == 1);
  CHECK(count_points(fat, rng) == 1);

  CHECK_THROWS_AS(rational_points(GradedIdeal(f, 5, {P("x0", f), P("x1", f)})), DomainError);
}

TEST_CASE("hyperplane restriction") {
  const FieldSpec f = F(101);
  const MultiPoly h = P("x0 + 2*x1 - x4", f);
  const auto basis = hyperplane_basis(h);
  REQUIRE(basis.size() == 4);
  for (const auto& b : basis) CHECK(h.evaluate(b).is_zero());
  const MultiPoly cubic = P("x0^3 + x1*x2*x3 + x4^2*x0", f);
  const MultiPoly r = restrict_to_span(cubic, basis);
  CHECK(r.nvars() == 4);
  const Point y = pt(f, {1, 2, 3, 4});
  Point x(5, Scalar::zero(f));
  for (int k = 0; k < 4; ++k) {
    for (int j = 0; j < 5; ++j) x[j] += y[k] * basis[k][j];
  }
  CHECK(r.evaluate(y) == cubic.evaluate(x));
  CHECK(lift_point(y, basis) == normalize_point(x));
  CHECK(span_ideal(f, 5, {pt(f, {1, 0, 0, 0, 0}), pt(f, {0, 1, 0, 0, 0})}).size() == 3);
}
