#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfaffcubic/ideal.hpp"
#include "pfaffcubic/points.hpp"
#include "pfaffcubic/segre.hpp"

namespace pfaffcubic {

/// Largest prime for which the exhaustive searches below are allowed.
inline constexpr std::uint32_t kMaxSearchPrime = 31;

/// A line given by two points; canonical() spans are in reduced row echelon form.
struct LineP {
  Point a, b;

  static LineP through(const Point& p, const Point& q);
  /// Linear forms vanishing on the line.
  std::vector<MultiPoly> ideal() const;
  bool contains(const Point& p) const;
  Point at(const Scalar& s, const Scalar& t) const;
  friend bool operator==(const LineP&, const LineP&) = default;
};

/// All F_p-rational lines on the surface {s = 0} in P^3 (s a cubic in 4
/// variables), by scanning every line of P^3(F_p). Requires p <= 31.
/// With jobs > 1 the scan is split into contiguous ranges; the merged list
/// is identical to the serial one.
std::vector<LineP> find_lines_on_surface(const MultiPoly& s, int jobs = 1);

/// Residual conic of a line in a plane section of a surface.
struct ResidualConic {
  std::vector<Point> plane_basis;  // three points spanning the plane
  MultiPoly line_form;             // the line, in plane coordinates
  MultiPoly conic;                 // cofactor, in plane coordinates
  int rank = 0;
  bool contains_line = false;      // the cofactor vanishes on the line again
};

/// Divides the restriction of s to the plane {plane = 0} by the line's form.
/// Throws DomainError unless the line lies on both the surface and the plane.
ResidualConic residual_conic(const MultiPoly& s, const LineP& line, const MultiPoly& plane);

/// C4 = C2 ∪ l ∪ l' on X: a smooth conic C2 and a line l in a hyperplane
/// section, meeting at x1, and a line l' through x2 on C2 leaving the hyperplane.
struct QuarticWitness {
  MultiPoly hyperplane;
  std::vector<MultiPoly> conic_plane;  // two linear forms
  MultiPoly conic;                     // quadric in P^4 cutting C2 from the plane
  LineP residual_to;                   // the line l_a whose plane section gives C2
  LineP l, l_prime;
  Point x1, x2;
  GradedIdeal ideal;                   // saturated ideal of C4
  int hyperplanes_tried = 0;
};

struct ScrollWitness {
  GradedIdeal ideal;  // three quadrics
  LineP directrix;
  Point x1, x2, x3;   // anchors on C2
  Point y1, y2, y3;   // anchors on the directrix
};

/// Searches hyperplane sections in a seed-determined order. Requires a normal,
/// non-cone cubic over F_p with p <= 31; throws SearchExhausted when the
/// budget runs out.
QuarticWitness build_rational_quartic(const CubicThreefold& x, std::uint64_t seed, int hyperplanes = 200,
                                      int jobs = 1);

/// The cubic scroll joining the directrix through y1 ∈ l, y2 ∈ l' to C2 by the
/// projectivity matching (y1, y2, y3) with (x1, x2, x3).
ScrollWitness cross_ratio_scroll(const CubicThreefold& x, const QuarticWitness& w);

/// Saturation of (I_X + I_Σ) : I_C4; checked to have Hilbert polynomial 5m,
/// no linear forms and five quadrics. Throws SearchExhausted naming the
/// failed check.
GradedIdeal residual_quintic(const CubicThreefold& x, const ScrollWitness& sw, const QuarticWitness& w,
                             int d_max = kDefaultHilbertDegree);

struct QuinticResult {
  QuarticWitness quartic;
  ScrollWitness scroll;
  GradedIdeal curve;
  int attempts = 0;
};

/// build_rational_quartic, cross_ratio_scroll and residual_quintic with
/// `retries` seeds derived from `seed`.
QuinticResult forge_quintic(const CubicThreefold& x, std::uint64_t seed, int retries = 8, int d_max = kDefaultHilbertDegree,
                            int jobs = 1);

}  // namespace pfaffcubic
