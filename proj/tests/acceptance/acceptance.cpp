// One line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>

#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/json_io.hpp"
#include "support.hpp"

using namespace pfaffcubic;
using namespace testsupport;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

// Collects the first failure message of a criterion.
struct Probe {
  Outcome out;
  void require(bool cond, const std::string& what) {
    if (!cond && out.ok) {
      out.ok = false;
      out.note = what;
    }
  }
};

CubicThreefold cubic(const std::string& s, const FieldSpec& f) { return CubicThreefold::parse(s, f); }

Outcome known_matrix() {
  Probe p;
  const FieldSpec q = FieldSpec::rationals();
  p.require(pfaffian(reference_double_plane_matrix(q)) == P("x0*x3^2 + x1*x4^2 + x2*x3*x4", q), "Pf differs");
  return p.out;
}

Outcome secant_identity() {
  Probe p;
  const FieldSpec q = FieldSpec::rationals();
  const MultiPoly f = P(kSecantCubic, q);
  const auto gens = rnc_quadrics(q);
  const DivisionResult div = normal_form_with_quotients(f, GradedIdeal(q, 5, gens));
  p.require(div.remainder.is_zero(), "nonzero remainder");
  MultiPoly sum(q, 5);
  for (std::size_t i = 0; i < gens.size(); ++i) sum += div.quotients[i] * gens[i];
  p.require(sum == f, "quotients do not re-expand to F");
  const MultiPoly displayed = P("x0", q) * P("x2*x4 - x3^2", q) + P("x2", q) * P("x1*x3 - x2^2", q) +
                              P("x1", q) * P("x2*x3 - x1*x4", q);
  p.require((f - displayed).is_zero(), "displayed identity fails");
  for (const auto& g : {P("x2*x4 - x3^2", q), P("x1*x3 - x2^2", q), P("x2*x3 - x1*x4", q)}) {
    p.require(in_ideal_oracle(g, gens, 5), "displayed quadric not in the quartic ideal");
  }
  return p.out;
}

Outcome classification_suite() {
  Probe p;
  const FieldSpec f = F(101);
  for (const auto& nf : normal_form_cases()) {
    const auto x = cubic(nf.cubic, f);
    const auto r = classify(x);
    const std::string name = nf.name;
    p.require(r.kind == SegreKind::DoubleCurve, name + ": kind " + to_string(r.kind));
    if (r.kind != SegreKind::DoubleCurve) continue;
    p.require(r.curve_kind && to_string(*r.curve_kind) == nf.curve_kind, name + ": curve kind");
    p.require(r.type && static_cast<int>(*r.type) == nf.type, name + ": type");
    p.require(r.curve_degree == nf.degree, name + ": degree");
    Rng rng(11);
    const auto s = random_slice(x, rng);
    p.require(s.geometric_points == nf.degree, name + ": slice has " + std::to_string(s.geometric_points) + " points");
    p.require(s.scheme_degree == nf.degree * nf.slice_milnor, name + ": slice scheme degree");
    for (const auto& pt : s.points) {
      p.require(pt.label == "A" + std::to_string(nf.slice_milnor), name + ": slice point " + pt.label);
    }
  }
  return p.out;
}

Outcome end_to_end(double& worst) {
  Probe p;
  for (const char* text : {"x0^3 + x1^3 + x2^3 + x3^3 + x4^3", kSecantCubic}) {
    const auto t0 = std::chrono::steady_clock::now();
    const PfaffianCertificate c = pfaffianize_text(text, F(13));
    const Json j = to_json(c);
    const CertificateCore back = certificate_from_json(Json::parse(dump(j)));
    const MultiPoly pf = pfaffian(back.matrix.matrix());
    const Scalar lambda = Scalar::from_int(back.field, 1);
    p.require(c.verified, std::string(text) + ": not verified");
    p.require(c.strategy == Strategy::Quintic, std::string(text) + ": strategy " + to_string(c.strategy));
    p.require(!pf.is_zero() && pf == lambda * back.cubic, std::string(text) + ": Pf(M) != F after JSON roundtrip");
    p.require(back.cubic == CubicThreefold::parse(text, back.field).poly(), "certificate F differs from input");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst = std::max(worst, secs);
    p.require(secs < 600, std::string(text) + ": over 10 minutes");
  }
  return p.out;
}

Outcome quintic_invariants() {
  Probe p;
  const FieldSpec f = F(13);
  for (const char* text : {"x0^3 + x1^3 + x2^3 + x3^3 + x4^3", kSecantCubic}) {
    const QuinticResult r = forge_quintic(cubic(text, f), 0);
    const HilbertData h = hilbert(r.curve);
    p.require(h.polynomial_string() == "5*m", "Hilbert polynomial " + h.polynomial_string());
    const auto quadrics = r.curve.degree_piece(2);
    p.require(r.curve.degree_piece(1).empty(), "h0(I_C(1)) != 0");
    p.require(quadrics.size() == 5, "h0(I_C(2)) = " + std::to_string(quadrics.size()));
    for (int m = 1; m <= 8; ++m) {
      const long oracle = binom(m + 4, 4) - static_cast<long>(span_rank(quadrics, 5, m));
      p.require(r.curve.quotient_dimension(m) == 5 * m, "Hilbert function at " + std::to_string(m));
      p.require(oracle == 5 * m, "quadric span oracle at " + std::to_string(m));
    }
  }
  return p.out;
}

Outcome be_roundtrip() {
  Probe p;
  const FieldSpec f = F(101);
  Rng rng(2024);
  for (int t = 0; t < 25; ++t) {
    const auto q = pfaffian_complements(random_skew_linear(rng, f, 5, 5));
    const auto back = pfaffian_complements(be_matrix(q));
    std::vector<MultiPoly> both = q;
    both.insert(both.end(), back.begin(), back.end());
    const std::size_t r = span_rank(q, 5, 2);
    p.require(r == 5 && span_rank(back, 5, 2) == r && span_rank(both, 5, 2) == r, "complement span differs");
  }
  for (int t = 0; t < 50; ++t) {
    const SkewLinearMatrix n = random_skew_linear(rng, f, 5, 5);
    std::vector<MultiPoly> c;
    for (int i = 0; i < 5; ++i) c.push_back(rng.form(f, 5, 1));
    const auto comp = pfaffian_complements(n);
    MultiPoly sum(f, 5);
    for (int i = 0; i < 5; ++i) sum += c[i] * comp[i];
    p.require(pfaffian(border(n, c).matrix()) == sum, "bordering identity");
  }
  return p.out;
}

Outcome pfaffian_properties() {
  Probe p;
  const FieldSpec f = F(101);
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const PolyMatrix m = random_skew_linear(rng, f, 5, 6).matrix();
    const MultiPoly pf = pfaffian(m);
    p.require(pf * pf == bareiss_poly_det(m), "Pf^2 != det");
  }
  for (int t = 0; t < 50; ++t) {
    const PolyMatrix m = random_skew_linear(rng, f, 5, 6).matrix();
    Matrix c(f, 6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) c(i, j) = rng.scalar(f);
    }
    const PolyMatrix pc = PolyMatrix::from_constants(c, 5);
    const PolyMatrix moved = pc.transpose() * m * pc;
    p.require(pfaffian(moved) == bareiss_determinant(c) * pfaffian(m), "Pf(P^T M P) != det(P) Pf(M)");
  }
  return p.out;
}

Outcome lattice_suite() {
  Probe p;
  p.require(minus_one_classes().size() == 27, "(-1)-classes: " + std::to_string(minus_one_classes().size()));
  p.require(roots().size() == 72, "roots: " + std::to_string(roots().size()));
  const LatticeClass k = LatticeClass::canonical();
  // exhaustive oracle over a box that contains every class with D^2 = -1 or -2
  long minus_one = 0, root_count = 0;
  std::array<int, 7> c{};
  std::function<void(int)> walk = [&](int i) {
    if (i == 7) {
      const LatticeClass d{c};
      const int dd = pair(d, d), dk = pair(d, k);
      minus_one += dd == -1 && dk == -1;
      root_count += dd == -2 && dk == 0;
      return;
    }
    for (int v = -3; v <= 3; ++v) {
      c[i] = v;
      walk(i + 1);
    }
  };
  walk(0);
  p.require(minus_one == 27 && root_count == 72, "box enumeration disagrees");
  const auto& rs = roots();
  long configs = 0;
  // every root of the configuration takes a turn as R1
  auto check = [&](std::vector<LatticeClass> chosen) {
    ++configs;
    for (std::size_t turn = 0; turn < chosen.size(); ++turn) {
      std::rotate(chosen.begin(), chosen.begin() + 1, chosen.end());
      RootConfig rc{chosen};
      const LatticeClass e = find_disjoint_e(rc);
      const LatticeClass d = quintic_class(chosen.front(), e);
      p.require(pair(d, d) == 5 && pair(d, -k) == 5, "D^2 or D.(-K) is not 5");
      for (const auto& r : chosen) p.require(pair(d, r) == 0, "D.R != 0");
      p.require(pair(e, chosen.front()) == 1, "E.R1 != 1");
      for (std::size_t i = 1; i < chosen.size(); ++i) p.require(pair(e, chosen[i]) == 0, "E.Ri != 0");
    }
  };
  for (std::size_t a = 0; a < rs.size(); ++a) {
    check({rs[a]});
    for (std::size_t b = a + 1; b < rs.size(); ++b) {
      if (pair(rs[a], rs[b]) != 0) continue;
      check({rs[a], rs[b]});
      for (std::size_t cidx = b + 1; cidx < rs.size(); ++cidx) {
        if (pair(rs[a], rs[cidx]) != 0 || pair(rs[b], rs[cidx]) != 0) continue;
        check({rs[a], rs[b], rs[cidx]});
      }
    }
  }
  p.out.note = p.out.ok ? std::to_string(configs) + " rA1 configurations" : p.out.note;
  return p.out;
}

Outcome non_integral_and_cone() {
  Probe p;
  const FieldSpec f = F(101);
  Rng rng(99);
  int done = 0;
  while (done < 50) {
    const MultiPoly l = rng.form(f, 5, 1), q = rng.form(f, 5, 2);
    if (l.is_zero() || q.is_zero()) continue;
    ++done;
    const auto c = pfaffian_non_integral(l, q);
    p.require(c.verified && pfaffian(c.matrix.matrix()) == l * q, "Pf != lQ");
  }
  const auto x = cubic("x0^3 + x1^3 + x2^3 + x3^3", F(13));
  const auto c = pfaffianize(x);
  p.require(c.strategy == Strategy::ConeBase, "cone strategy " + to_string(c.strategy));
  const MultiPoly pf = pfaffian(c.matrix.matrix());
  p.require(c.verified && pf == x.poly(), "cone certificate does not verify");
  p.require(pf * pf == bareiss_poly_det(c.matrix.matrix()), "cone det oracle");
  return p.out;
}

Outcome determinism() {
  Probe p;
  const char* inputs[] = {"x0^3 + x1^3 + x2^3 + x3^3 + x4^3", kSecantCubic, "x0^3 + x1^3 + x2^3 + x3^3",
                          "x0*x3^2 + x1*x4^2 + x2*x3*x4"};
  for (const char* text : inputs) {
    for (std::uint64_t seed : {0ULL, 5ULL}) {
      PfaffianizeOptions o;
      o.seed = seed;
      const std::string a = dump(to_json(pfaffianize_text(text, F(13), o)));
      const std::string b = dump(to_json(pfaffianize_text(text, F(13), o)));
      o.jobs = 3;
      const std::string c = dump(to_json(pfaffianize_text(text, F(13), o)));
      p.require(a == b && a == c, std::string(text) + ": certificates differ for seed " + std::to_string(seed));
    }
    const std::string r1 = dump(to_json(classify(cubic(text, F(13)), 3)));
    const std::string r2 = dump(to_json(classify(cubic(text, F(13)), 3)));
    p.require(r1 == r2, std::string(text) + ": reports differ");
  }
  return p.out;
}

}  // namespace

int main() {
  double worst_pfaffianize = 0;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"known double-plane matrix reproduction", known_matrix},
      {"secant-cubic identity", secant_identity},
      {"classification suite over F_101", classification_suite},
      {"end-to-end Pfaffianization (Fermat, secant)", [&] { return end_to_end(worst_pfaffianize); }},
      {"residual-quintic invariants", quintic_invariants},
      {"BE roundtrip and bordering identity", be_roundtrip},
      {"Pfaffian property suite", pfaffian_properties},
      {"lattice suite", lattice_suite},
      {"non-integral and cone strategies", non_integral_and_cone},
      {"determinism", determinism},
  };
  const double limits[] = {1, 1e9, 120, 1e9, 1e9, 1e9, 1e9, 1e9, 1e9, 1e9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs >= limits[i]) o = {false, "over the time limit"};
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << "  (" << secs << " s)";
    if (!o.note.empty()) std::cout << "  " << o.note;
    std::cout << std::endl;
  }
  std::cout << "slowest Pfaffianization: " << worst_pfaffianize << " s\n";
  return failed ? 1 : 0;
}
