#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfaffcubic/ideal.hpp"
#include "pfaffcubic/linear_change.hpp"
#include "pfaffcubic/points.hpp"
#include "pfaffcubic/rng.hpp"

namespace pfaffcubic {

/// A cubic form in x0..x4.
class CubicThreefold {
 public:
  /// Throws DomainError unless f is a nonzero cubic form in 5 variables.
  explicit CubicThreefold(HomogeneousForm f);
  static CubicThreefold parse(const std::string& text, const FieldSpec& field);

  const HomogeneousForm& form() const { return f_; }
  const MultiPoly& poly() const { return f_.poly(); }
  const FieldSpec& field() const { return f_.field(); }

 private:
  HomogeneousForm f_;
};

/// Matrix of second partials evaluated at a point.
Matrix hessian_at(const MultiPoly& f, const Point& p);

/// Basis of the space of directions v with sum_k v_k d^3F/dx_i dx_j dx_k = 0
/// for all i, j; empty when X is not a cone.
std::vector<Point> cone_apex(const CubicThreefold& x);

struct LinearFactorization {
  enum class Status { Found, None, Undetermined };
  Status status = Status::None;
  MultiPoly linear;
  MultiPoly quadric;
  std::string method;
};
LinearFactorization factor_off_linear(const CubicThreefold& x, std::uint64_t seed = 0);

/// Saturated Jacobian ideal.
GradedIdeal singular_scheme(const CubicThreefold& x);

struct TangentConeData {
  Point point;
  /// Change sending the point to [1:0:0:0:0].
  LinearChange change = LinearChange::identity(FieldSpec::prime(5), 1);
  MultiPoly q;  // degree 2, free of x0
  MultiPoly c;  // degree 3, free of x0
  int rank = 0;
};
/// Throws DomainError if the point is not a singular point of X.
TangentConeData tangent_cone_at(const CubicThreefold& x, const Point& p);

/// Labels used in reports: rank 4 or 3 conic node, 2 binode, 1 unode, 0 triple point.
std::string double_point_label(int rank);

enum class CurveType { First = 1, Second = 2 };

struct CurveTypeResult {
  CurveType type = CurveType::First;
  std::vector<Point> samples;
  std::vector<int> ranks;
};
/// Samples rational points of the curve V(curve) by hyperplane sections and
/// reads the tangent-cone ranks. Throws Undetermined with too few points.
CurveTypeResult double_curve_type(const CubicThreefold& x, const GradedIdeal& curve, Rng& rng);

enum class SegreKind { Smooth, IsolatedDoublePoints, DoubleCurve, Cone, NonNormalPlane, NonIntegral };
enum class CurveKind { Line, Conic, TwoLines, ThreeConcurrentLines, RationalQuartic, TwoConicsMeeting };

std::string to_string(SegreKind k);
std::string to_string(CurveKind k);

struct SingularPoint {
  Point point;
  int rank = 0;
  std::string label;
};

struct SegreReport {
  SegreKind kind = SegreKind::Smooth;
  FieldSpec field;
  /// Set when the input was over Q and the analysis ran modulo this prime.
  std::uint32_t reduced_modulo = 0;
  std::string singular_hilbert;  // Hilbert polynomial of the singular scheme
  // IsolatedDoublePoints
  long geometric_points = 0;
  std::vector<SingularPoint> points;  // rational points with their ranks
  // DoubleCurve
  std::optional<CurveKind> curve_kind;
  std::optional<CurveType> type;
  int curve_degree = 0;
  std::vector<MultiPoly> curve_ideal;
  long extra_points = 0;
  // Cone
  std::vector<Point> apex;
  // NonNormalPlane
  std::vector<MultiPoly> plane_ideal;
  // NonIntegral
  std::optional<LinearFactorization> factors;
};

/// d_max bounds the degrees in which Hilbert functions are computed.
SegreReport classify(const CubicThreefold& x, std::uint64_t seed = 0, int d_max = kDefaultHilbertDegree);

enum class AdeType { A1, A2, Ak, Other };
std::string ade_label(AdeType t, int milnor);

struct SlicePoint {
  Point point;  // ambient coordinates
  int rank = 0;
  int milnor = 0;
  AdeType ade = AdeType::Other;
  std::string label;
};

struct SliceReport {
  MultiPoly hyperplane;
  long geometric_points = 0;
  long scheme_degree = 0;  // degree of the singular scheme of the slice
  bool all_rational = false;
  std::vector<SlicePoint> points;
};

/// Singularities of the cubic surface X ∩ {h = 0}. Throws DomainError when
/// the slice has non-isolated singularities.
SliceReport slice_singularities(const CubicThreefold& x, const MultiPoly& h);

/// Random hyperplanes until the slice has isolated singularities that are all
/// rational over the base field. When X is singular along a curve the
/// hyperplane must also meet the curve in deg(curve) distinct points and the
/// slice may have no other singular points.
SliceReport random_slice(const CubicThreefold& x, Rng& rng, int attempts = 200);

}  // namespace pfaffcubic
