#pragma once

#include <vector>

#include "pfaffcubic/ideal.hpp"
#include "pfaffcubic/rng.hpp"

namespace pfaffcubic {

/// Projective point, normalized so the first nonzero coordinate is 1.
using Point = std::vector<Scalar>;

Point normalize_point(Point p);
bool is_zero_vector(const std::vector<Scalar>& v);

/// Linear forms cutting out the point (a basis of its annihilator).
std::vector<MultiPoly> point_ideal(const FieldSpec& field, const Point& p);
/// Linear forms vanishing on the span of the given points.
std::vector<MultiPoly> span_ideal(const FieldSpec& field, int nvars, const std::vector<Point>& points);

/// Basis of the forms of the given degree vanishing at all the points.
std::vector<MultiPoly> forms_vanishing_at(const FieldSpec& field, int nvars, const std::vector<Point>& points,
                                          int degree);

/// All points of V(I) with coordinates in the base field; I must define a
/// finite set. Throws DomainError if some chart has a positive-dimensional
/// zero set.
std::vector<Point> rational_points(const GradedIdeal& i);

/// Number of distinct points of the finite set V(I) over the algebraic
/// closure, from the squarefree part of a generic projection's eliminant.
long count_points(const GradedIdeal& i, Rng& rng);

/// A basis b_0..b_{n-2} of the hyperplane {h = 0}; x = sum y_k b_k.
std::vector<Point> hyperplane_basis(const MultiPoly& h);
/// f(sum_k y_k b_k) as a polynomial in y_0..y_{m-1}.
MultiPoly restrict_to_span(const MultiPoly& f, const std::vector<Point>& basis);
/// The point sum_k y_k b_k in the ambient coordinates.
Point lift_point(const Point& y, const std::vector<Point>& basis);

}  // namespace pfaffcubic
