#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfaffcubic/field.hpp"
#include "pfaffcubic/monomial.hpp"

namespace pfaffcubic {

/// Sparse polynomial in x0..x{n-1}. Terms are kept sorted in descending
/// degrevlex order with no zero coefficients, so equality is structural.
class MultiPoly {
 public:
  struct Term {
    Monomial m;
    Scalar c;
  };

  MultiPoly() = default;
  MultiPoly(FieldSpec field, int nvars);

  static MultiPoly constant(FieldSpec field, int nvars, const Scalar& c);
  static MultiPoly variable(FieldSpec field, int nvars, int i);
  static MultiPoly monomial(FieldSpec field, int nvars, const Monomial& m, const Scalar& c);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static MultiPoly from_terms(FieldSpec field, int nvars, std::vector<Term> terms);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  const Term& leading() const { return terms_.front(); }
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;
  /// Sum of the terms of total degree d.
  MultiPoly homogeneous_part(int d) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Scalar& s, const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const Scalar& s) { return s * a; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly mul_term(const Monomial& m, const Scalar& c) const;
  MultiPoly pow(unsigned e) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Divides by the leading coefficient; zero stays zero.
  MultiPoly monic() const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  MultiPoly partial(int i) const;
  /// Replaces x_i by images[i]; the result lives in the images' ring.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  /// Same polynomial viewed in a ring with n >= nvars() variables, or fewer if
  /// the dropped variables do not occur.
  MultiPoly with_nvars(int n) const;
  /// Quotient when g divides this exactly, otherwise nothing.
  std::optional<MultiPoly> exact_divide(const MultiPoly& g) const;
  /// Same coefficients read in another field (integers and fractions reduced mod p).
  MultiPoly change_field(const FieldSpec& target) const;

  std::string to_string() const;

 private:
  FieldSpec field_;
  int nvars_ = 0;
  std::vector<Term> terms_;
};

/// A MultiPoly whose terms all have total degree `degree()`. The zero form is
/// allowed only when its degree is given explicitly.
class HomogeneousForm {
 public:
  HomogeneousForm() = default;
  /// Throws DomainError if p is zero or not homogeneous.
  explicit HomogeneousForm(MultiPoly p);
  HomogeneousForm(MultiPoly p, int degree);

  const MultiPoly& poly() const { return poly_; }
  operator const MultiPoly&() const { return poly_; }
  int degree() const { return degree_; }
  int nvars() const { return poly_.nvars(); }
  const FieldSpec& field() const { return poly_.field(); }
  bool is_zero() const { return poly_.is_zero(); }
  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

 private:
  MultiPoly poly_;
  int degree_ = 0;
};

/// Parses the polynomial grammar: integers, a/b fractions, x0..x{n-1},
/// + - * ^ and parentheses. Throws ParseError with the offending column.
MultiPoly parse_polynomial(std::string_view text, int nvars, const FieldSpec& field);
/// parse_polynomial plus homogeneity: zero and mixed-degree input are rejected.
HomogeneousForm parse_form(std::string_view text, int nvars, const FieldSpec& field);

/// The Euler-identity partials (d/dx_0 f, ..., d/dx_{n-1} f).
std::vector<HomogeneousForm> partials(const HomogeneousForm& f);

inline std::vector<MultiPoly> as_polys(const std::vector<HomogeneousForm>& forms) {
  return std::vector<MultiPoly>(forms.begin(), forms.end());
}

/// Linear form sum c_i x_i.
MultiPoly linear_form(const FieldSpec& field, const std::vector<Scalar>& coeffs);
/// Coefficients of a linear form (length nvars); throws if p is not linear.
std::vector<Scalar> linear_coefficients(const MultiPoly& p);

}  // namespace pfaffcubic
