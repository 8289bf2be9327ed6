#pragma once

#include <vector>

#include "pfaffcubic/field.hpp"

namespace pfaffcubic {

/// Dense univariate polynomial, coefficient of t^i at index i, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(FieldSpec field, std::vector<Scalar> coeffs);
  static UniPoly constant(FieldSpec field, const Scalar& c);
  /// t - a
  static UniPoly linear_root(FieldSpec field, const Scalar& a);

  const FieldSpec& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Scalar& leading() const { return c_.back(); }
  Scalar evaluate(const Scalar& t) const;
  UniPoly monic() const;
  UniPoly derivative() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  FieldSpec field_;
  std::vector<Scalar> c_;
};

/// a = q * b + r with deg r < deg b.
void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly gcd(UniPoly a, UniPoly b);
UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& mod);
/// Product of the distinct monic irreducible factors.
UniPoly radical(const UniPoly& f);
/// Distinct roots in the base field, sorted. Over Q only rational roots whose
/// numerator and denominator are small enough to enumerate divisors are found.
std::vector<Scalar> roots(const UniPoly& f);

}  // namespace pfaffcubic
