#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pfaffcubic/curve.hpp"
#include "pfaffcubic/poly_matrix.hpp"
#include "pfaffcubic/segre.hpp"

namespace pfaffcubic {

/// Skew 5x5 matrix of linear forms whose complementary Pfaffians span the same
/// quadrics as the input. The input must have exactly 5 linear syzygies;
/// throws DomainError otherwise, or when no constant change makes the
/// syzygy matrix skew.
SkewLinearMatrix be_matrix(const std::vector<MultiPoly>& quadrics);

/// Linear forms c with sum c_i q_i = f, from the pivot solution of the linear
/// system in degree deg f (free unknowns zero). Throws DomainError when f is
/// not in the ideal of the q's.
std::vector<MultiPoly> express_in_quadrics(const MultiPoly& f, const std::vector<MultiPoly>& quadrics);

/// N bordered by c in the last column (and -c in the last row), so that
/// Pf = sum c_i p_i with p = pfaffian_complements(N).
SkewLinearMatrix border(const SkewLinearMatrix& n, const std::vector<MultiPoly>& c);

struct VerifyResult {
  bool ok = false;
  Scalar lambda;  // Pf(M) = lambda F when ok
  MultiPoly pfaffian;
};

/// Computes Pf(M) and tests whether it is a nonzero multiple of f.
VerifyResult verify(const SkewLinearMatrix& m, const MultiPoly& f);

enum class Strategy { Quintic, ConeBase, DoublePlane, NonIntegral };
std::string to_string(Strategy s);

/// Named evidence in emission order; values are polynomials, points or
/// matrices rendered as text.
struct Witness {
  std::string name;
  std::vector<std::string> values;
};

struct PfaffianCertificate {
  FieldSpec field;
  MultiPoly cubic;
  Strategy strategy = Strategy::Quintic;
  SkewLinearMatrix matrix;
  Scalar lambda;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, bool>> checks;
  std::uint64_t seed = 0;
  int attempts = 1;
  bool verified = false;
};

struct QuinticCertificate {
  GradedIdeal curve;
  std::vector<MultiPoly> quadrics;
  SkewLinearMatrix n;
  bool hp_5m = false, nondegenerate = false, be_roundtrip = false;
};

/// The quadrics of a residual quintic and their Buchsbaum-Eisenbud matrix,
/// with the three structural checks evaluated.
QuinticCertificate quintic_certificate(const GradedIdeal& curve, int d_max = kDefaultHilbertDegree);

/// F = a x3^2 + b x3 x4 + c x4^2 after moving the double plane to x3 = x4 = 0.
PfaffianCertificate pfaffian_double_plane(const CubicThreefold& x, const std::vector<MultiPoly>& plane);
/// Block matrix of a 4x4 skew M_Q with Pf = Q and [[0, l], [-l, 0]].
PfaffianCertificate pfaffian_non_integral(const MultiPoly& l, const MultiPoly& q);
/// Five points in general position on the base of the cone, bordered.
PfaffianCertificate pfaffian_cone(const CubicThreefold& x, const std::vector<Point>& apex, std::uint64_t seed);
/// The residual-quintic route for normal cubics that are not cones.
PfaffianCertificate pfaffian_quintic(const CubicThreefold& x, std::uint64_t seed, int retries,
                                     int d_max = kDefaultHilbertDegree, int jobs = 1);

struct PfaffianizeOptions {
  std::uint64_t seed = 0;
  int retries = 8;
  int d_max = kDefaultHilbertDegree;
  int jobs = 1;
};

/// Classifies, dispatches on the kind, verifies and normalizes lambda to 1.
/// Throws SearchExhausted when a search runs out, FieldLimitation when the
/// strategy is not available over the field.
PfaffianCertificate pfaffianize(const CubicThreefold& x, const PfaffianizeOptions& options = {});

/// Primes tried after `start` when a search is exhausted: 11, 13, 17, ..., 31.
std::vector<std::uint32_t> retry_ladder(std::uint32_t start);

/// pfaffianize on `text` read over `field`, re-reading it over the next
/// primes of the ladder when the search is exhausted.
PfaffianCertificate pfaffianize_text(const std::string& text, const FieldSpec& field, const PfaffianizeOptions& options = {});

}  // namespace pfaffcubic
