#include "doctest.h"
#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/ideal.hpp"
#include "support.hpp"

using namespace pfaffcubic;
using namespace testsupport;

namespace {

GradedIdeal I(const FieldSpec& f, const std::vector<std::string>& gens, int n = 5) {
  std::vector<MultiPoly> v;
  for (const auto& s : gens) v.push_back(P(s, f, n));
  return GradedIdeal(f, n, v);
}

void check_same_ideal_by_oracle(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b, int n) {
  for (const auto& g : a) CHECK(in_ideal_oracle(g, b, n));
  for (const auto& g : b) CHECK(in_ideal_oracle(g, a, n));
}

}  // namespace

TEST_CASE("groebner basis of random quadrics is a basis of the same ideal") {
  for (const FieldSpec f : {F(101), F(32003), FieldSpec::rationals()}) {
    Rng rng(7);
    for (int trial = 0; trial < (f.is_rationals() ? 1 : 3); ++trial) {
      std::vector<MultiPoly> gens;
      for (int k = 0; k < 4; ++k) gens.push_back(rng.form(f, 5, 2));
      gens.push_back(rng.form(f, 5, 3));
      const auto gb = groebner_basis(gens);
      CHECK(is_groebner_basis(gb));
      for (const auto& g : gb) {
        CHECK(g.leading().c.is_one());
        CHECK(g.degree() <= 7);
      }
      for (const auto& g : gens) CHECK(reduce(g, gb).is_zero());
      for (const auto& g : gb) {
        if (g.degree() <= 4) CHECK(in_ideal_oracle(g, gens, 5));
      }
      // Hilbert function against plain linear algebra
      GradedIdeal ideal(f, 5, gens);
      for (int d = 0; d <= 4; ++d) {
        CHECK(ideal.quotient_dimension(d) == binom(d + 4, 4) - static_cast<long>(span_rank(gens, 5, d)));
      }
    }
  }
}

TEST_CASE("groebner basis under an elimination order") {
  const FieldSpec f = F(101);
  // t*x0 - x1, t*x1 - x2 with t = x3: eliminating t leaves x1^2 - x0*x2
  std::vector<MultiPoly> gens = {P("x3*x0 - x1", f, 4), P("x3*x1 - x2", f, 4)};
  const auto order = MonomialOrder::eliminate(1u << 3);
  CHECK(is_groebner_basis(groebner_basis(gens, order), order));
  GradedIdeal e = eliminate(gens, 1u << 3, 3);
  CHECK(e.equals(I(f, {"x1^2 - x0*x2"}, 3)));
}

TEST_CASE("rational normal quartic") {
  for (const FieldSpec f : {F(13), FieldSpec::rationals()}) {
    const auto quadrics = rnc_quadrics(f);
    GradedIdeal rnc(f, 5, quadrics);
    for (int d = 1; d <= 6; ++d) {
      CHECK(rnc.quotient_dimension(d) == 4 * d + 1);
      CHECK(binom(d + 4, 4) - static_cast<long>(span_rank(quadrics, 5, d)) == 4 * d + 1);
    }
    const HilbertData h = hilbert(rnc);
    CHECK(h.dimension() == 1);
    CHECK(h.degree() == 4);
    CHECK(h.arithmetic_genus() == 0);
    CHECK(h.polynomial_string() == "4*m + 1");
    CHECK(h.regularity_bound <= 1);

    const MultiPoly secant = P(kSecantCubic, f);
    CHECK(rnc.contains(secant));
    const DivisionResult div = normal_form_with_quotients(secant, rnc);
    CHECK(div.remainder.is_zero());
    MultiPoly sum(f, 5);
    for (std::size_t i = 0; i < quadrics.size(); ++i) sum += div.quotients[i] * quadrics[i];
    CHECK(sum == secant);
  }
}

TEST_CASE("division with remainder reconstructs the input") {
  const FieldSpec f = F(31);
  GradedIdeal ideal = I(f, {"x0^2 + x1*x2", "x1^2 - x3*x4"});
  const MultiPoly g = P("x0^3 + x2^3 + x0*x1*x4 + x3^3", f);
  const DivisionResult div = normal_form_with_quotients(g, ideal);
  CHECK_FALSE(div.remainder.is_zero());
  CHECK(div.remainder == ideal.normal_form(g));
  MultiPoly sum = div.remainder;
  for (std::size_t i = 0; i < 2; ++i) sum += div.quotients[i] * ideal.generators()[i];
  CHECK(sum == g);
}

TEST_CASE("intersection and quotients") {
  const FieldSpec f = F(101);
  CHECK(intersect(I(f, {"x0"}), I(f, {"x1"})).equals(I(f, {"x0*x1"})));
  CHECK(intersect(I(f, {"x0", "x1"}), I(f, {"x1", "x2"})).equals(I(f, {"x1", "x0*x2"})));
  CHECK(colon(I(f, {"x0*x1", "x0*x2"}), P("x0", f)).equals(I(f, {"x1", "x2"})));
  CHECK(colon(I(f, {"x0*x1"}), P("x2", f)).equals(I(f, {"x0*x1"})));
  CHECK(colon(I(f, {"x0^2", "x1"}), P("x1", f)).is_unit());
  CHECK(colon_variable(I(f, {"x0*x3^2", "x1*x3"}), 3).equals(I(f, {"x0*x3", "x1"})));
  CHECK(saturate_variable(I(f, {"x0*x3^2", "x1*x3"}), 3).equals(I(f, {"x0", "x1"})));
  CHECK(ideal_quotient(I(f, {"x0*x3", "x0*x4"}), I(f, {"x3", "x4"})).equals(I(f, {"x0"})));
}

TEST_CASE("saturation") {
  const FieldSpec f = F(101);
  CHECK(saturate(I(f, {"x0*x3", "x0*x4"}), I(f, {"x3", "x4"})).equals(I(f, {"x0"})));
  const GradedIdeal m = GradedIdeal::irrelevant(f, 5);
  CHECK(saturate(m).is_unit());
  CHECK(saturate(I(f, {"x0^2", "x1^3", "x2", "x3", "x4"})).is_unit());

  // the saturation of I * m is I again for a saturated I
  const GradedIdeal rnc(f, 5, rnc_quadrics(f));
  const GradedIdeal fat = rnc * m;
  CHECK_FALSE(fat.contains(rnc));
  const GradedIdeal s = saturate(fat);
  CHECK(s.saturation() == GradedIdeal::Saturation::Saturated);
  CHECK(s.equals(rnc));
  CHECK(saturate(fat, m).equals(rnc));

  // a line with a component at the irrelevant ideal
  const GradedIdeal line = I(f, {"x0", "x1", "x2"});
  const GradedIdeal irrelevant_part = intersect(line, m * m * m);
  CHECK_FALSE(irrelevant_part.contains(line));
  CHECK(saturate(irrelevant_part).equals(line));

  // an embedded point of the projective scheme is not removed
  const GradedIdeal embedded = intersect(line, I(f, {"x0", "x1^2", "x2", "x3^2"}));
  CHECK(saturate(embedded).equals(embedded));
  CHECK(saturate(embedded, I(f, {"x3"})).equals(line));
}

TEST_CASE("the secant cubic is singular exactly along the quartic curve") {
  for (const FieldSpec f : {F(13), F(101), FieldSpec::rationals()}) {
    const MultiPoly secant = P(kSecantCubic, f);
    const GradedIdeal jac(f, 5, as_polys(partials(HomogeneousForm(secant))));
    const GradedIdeal rnc(f, 5, rnc_quadrics(f));
    CHECK(rnc.contains(jac));
    const GradedIdeal sat = saturate(jac);
    CHECK(sat.equals(rnc));
    check_same_ideal_by_oracle(sat.gb(), rnc_quadrics(f), 5);
  }
}

TEST_CASE("hypersurface and point Hilbert polynomials") {
  const FieldSpec f = F(101);
  const HilbertData cubic = hilbert(I(f, {"x0^3 + x1^3 + x2^3 + x3^3 + x4^3"}));
  CHECK(cubic.dimension() == 3);
  CHECK(cubic.degree() == 3);
  for (int d = 0; d <= 12; ++d) CHECK(cubic.values[d] == binom(d + 4, 4) - binom(d + 1, 4));

  const HilbertData pt = hilbert(I(f, {"x0", "x1", "x2", "x3"}));
  CHECK(pt.dimension() == 0);
  CHECK(pt.degree() == 1);
  CHECK(pt.polynomial_string() == "1");

  const HilbertData empty = hilbert(GradedIdeal::irrelevant(f, 5));
  CHECK(empty.dimension() == -1);
  CHECK(empty.degree() == 0);

  const HilbertData space = hilbert(GradedIdeal(f, 5, {}));
  CHECK(space.dimension() == 4);
  CHECK(space.degree() == 1);

  CHECK_THROWS_AS(hilbert(I(f, {"x0^9"}), 8), Undetermined);
  CHECK(hilbert(I(f, {"x0^9"}), 16).degree() == 9);
}

TEST_CASE("degree pieces") {
  const FieldSpec f = F(101);
  const GradedIdeal rnc(f, 5, rnc_quadrics(f));
  CHECK(rnc.degree_piece(1).empty());
  const auto q = rnc.degree_piece(2);
  CHECK(q.size() == 6);
  for (const auto& g : q) CHECK(in_ideal_oracle(g, rnc_quadrics(f), 5));
  CHECK(rnc.degree_piece(3).size() == 35 - 13);
}

TEST_CASE("linear syzygies") {
  const FieldSpec f = F(101);
  const auto quadrics = rnc_quadrics(f);
  const auto syz = linear_syzygies(quadrics);
  CHECK(syz.size() == 8);
  for (const auto& s : syz) {
    MultiPoly sum(f, 5);
    for (std::size_t i = 0; i < quadrics.size(); ++i) sum += s[i] * quadrics[i];
    CHECK(sum.is_zero());
  }
  // a complete intersection of quadrics has no linear syzygies
  CHECK(linear_syzygies({P("x0^2", f), P("x1^2", f)}).empty());
  CHECK(linear_syzygies({P("x0*x1", f), P("x0*x2", f)}).size() == 1);
}

TEST_CASE("ideal construction rejects inhomogeneous generators") {
  const FieldSpec f = F(101);
  CHECK_THROWS_AS(I(f, {"x0^2 + x1"}), DomainError);
  CHECK(I(f, {"0", "x0"}).generators().size() == 1);
}

TEST_CASE("syzygies of the sub-Pfaffians of a 5x5 skew matrix are its rows") {
  const FieldSpec f = F(101);
  Rng rng(11);
  const SkewLinearMatrix n = random_skew_linear(rng, f, 5, 5);
  const auto p = pfaffian_complements(n);
  const auto syz = linear_syzygies(p);
  CHECK(syz.size() == 5);
  // each row of N is a syzygy: N * p = 0 by expansion
  for (std::size_t i = 0; i < 5; ++i) {
    MultiPoly sum(f, 5);
    for (std::size_t j = 0; j < 5; ++j) sum += n.matrix()(i, j) * p[j];
    CHECK(sum.is_zero());
  }
  CHECK(linear_syzygies({P("x0^2", f), P("x1^2", f), P("x2^2", f), P("x3^2", f), P("x4^2", f)}).empty());
  const MultiPoly q = P("x0*x1 + x2^2", f);
  const auto dup = linear_syzygies({q, q, P("x3^2", f), P("x4^2", f), P("x0*x4", f)});
  for (int k = 0; k < 5; ++k) {
    std::vector<Scalar> target(25, Scalar::zero(f));
    target[k] = Scalar::one(f);
    target[5 + k] = -Scalar::one(f);
    // the vector (x_k, -x_k, 0, 0, 0) lies in the span of the computed basis
    Matrix span(f, dup.size() + 1, 25);
    for (std::size_t s = 0; s < dup.size(); ++s) {
      for (int i = 0; i < 5; ++i) {
        const auto c = linear_coefficients(dup[s][i]);
        for (int j = 0; j < 5; ++j) span(s, i * 5 + j) = c[j];
      }
    }
    for (int j = 0; j < 25; ++j) span(dup.size(), j) = target[j];
    CHECK(span.rank() == dup.size());
  }
}

TEST_CASE("ideal quotient and saturation properties") {
  const FieldSpec f = F(101);
  CHECK(colon(I(f, {"x0*x1"}), P("x0", f)).equals(I(f, {"x1"})));
  CHECK(colon(I(f, {"x0^2"}), P("x0", f)).equals(I(f, {"x0"})));
  const DivisionResult div = normal_form_with_quotients(P("x0*x1^2", f), I(f, {"x0"}));
  CHECK(div.remainder.is_zero());
  CHECK(div.quotients[0] == P("x1^2", f));

  Rng rng(5);
  const GradedIdeal rnc(f, 5, rnc_quadrics(f));
  const MultiPoly generic = rng.form(f, 5, 3);
  const MultiPoly r = rnc.normal_form(generic);
  CHECK_FALSE(r.is_zero());
  CHECK_FALSE(in_ideal_oracle(r, rnc_quadrics(f), 5));

  const GradedIdeal i = I(f, {"x0*x3^2", "x1*x3*x4", "x2^2*x4"});
  const GradedIdeal j = I(f, {"x3", "x4"});
  const GradedIdeal q = ideal_quotient(i, j);
  CHECK(q.contains(i));
  CHECK(i.contains(q * j));
  const GradedIdeal s = saturate(i, j);
  CHECK(ideal_quotient(s, j).equals(s));
  CHECK(saturate(s).equals(saturate(saturate(s))));

  const HilbertData line = hilbert(I(f, {"x0", "x1", "x2"}));
  CHECK(line.polynomial_string() == "m + 1");
}
