#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pfaffcubic/groebner.hpp"
#include "pfaffcubic/linalg.hpp"
#include "pfaffcubic/poly.hpp"

namespace pfaffcubic {

/// Homogeneous ideal with a lazily computed degrevlex Groebner basis. Copies
/// share the cache, which is filled at most once.
class GradedIdeal {
 public:
  enum class Saturation { Unknown, Saturated, NotSaturated };

  GradedIdeal() = default;
  /// Zero generators are dropped; the rest must be homogeneous.
  GradedIdeal(FieldSpec field, int nvars, std::vector<MultiPoly> generators);
  static GradedIdeal irrelevant(FieldSpec field, int nvars);
  static GradedIdeal unit(FieldSpec field, int nvars);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  const std::vector<MultiPoly>& gb() const;
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  MultiPoly normal_form(const MultiPoly& f) const;
  bool contains(const MultiPoly& f) const { return normal_form(f).is_zero(); }
  bool contains(const GradedIdeal& other) const;
  /// Same ideal, tested by mutual reduction of generators.
  bool equals(const GradedIdeal& other) const { return contains(other) && other.contains(*this); }

  Saturation saturation() const { return sat_; }
  GradedIdeal with_saturation(Saturation s) const;

  /// Dimension of the degree-d piece of S/I.
  long quotient_dimension(int d) const;
  /// Basis (as polynomials) of the degree-d piece of I, in row-echelon form.
  std::vector<MultiPoly> degree_piece(int d) const;

  GradedIdeal operator+(const GradedIdeal& o) const;
  GradedIdeal operator*(const GradedIdeal& o) const;
  GradedIdeal add(const std::vector<MultiPoly>& more) const;
  /// Generators as strings in the polynomial grammar.
  std::vector<std::string> to_strings() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<MultiPoly> gb;
  };
  FieldSpec field_;
  int nvars_ = 0;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
  Saturation sat_ = Saturation::Unknown;
};

struct DivisionResult {
  std::vector<MultiPoly> quotients;  // one per generator of the ideal
  MultiPoly remainder;
};

/// f = sum q_i g_i + r with r the degrevlex normal form of f. The quotients
/// refer to the ideal's own generators and are found by linear algebra in
/// each degree; for f outside the ideal they express f - r.
DivisionResult normal_form_with_quotients(const MultiPoly& f, const GradedIdeal& i);

GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b);
/// I : (f).
GradedIdeal colon(const GradedIdeal& i, const MultiPoly& f);
/// I : J = intersection of I : (g) over generators g of J.
GradedIdeal ideal_quotient(const GradedIdeal& i, const GradedIdeal& j);
/// I : x_k and I : x_k^infinity from a degrevlex basis with x_k last.
GradedIdeal colon_variable(const GradedIdeal& i, int k);
GradedIdeal saturate_variable(const GradedIdeal& i, int k);
/// I : J^infinity. For J the irrelevant ideal this is the intersection of the
/// saturations by each variable; otherwise I : J is iterated until stable.
GradedIdeal saturate(const GradedIdeal& i);
GradedIdeal saturate(const GradedIdeal& i, const GradedIdeal& j);
/// Eliminates the variables in mask and returns the ideal in the remaining
/// ring, variables renumbered in order.
GradedIdeal eliminate(const std::vector<MultiPoly>& gens, std::uint32_t mask, int nvars_kept);

/// Hilbert function on [0, d_max] and the interpolated Hilbert polynomial.
struct HilbertData {
  std::vector<long> values;
  std::vector<mpq_class> polynomial;  // coefficients of m^0, m^1, ...
  int regularity_bound = 0;

  /// Degree of the Hilbert polynomial (-1 for the zero polynomial), i.e. the
  /// projective dimension.
  int dimension() const;
  /// Leading coefficient times dimension!, the degree of the scheme.
  long degree() const;
  mpq_class evaluate(long m) const;
  /// Arithmetic genus 1 - HP(0) for curves.
  long arithmetic_genus() const;
  std::string polynomial_string() const;
};

inline constexpr int kDefaultHilbertDegree = 12;

/// Throws Undetermined if the values have not stabilized by d_max.
HilbertData hilbert(const GradedIdeal& i, int d_max = kDefaultHilbertDegree);

/// Basis of the linear syzygies (l_1..l_k) with sum l_i q_i = 0.
std::vector<std::vector<MultiPoly>> linear_syzygies(const std::vector<MultiPoly>& quadrics);

/// Coordinates of homogeneous forms of degree d in the monomial basis (descending degrevlex).
std::vector<Scalar> coordinates(const MultiPoly& f, const std::vector<Monomial>& basis);

}  // namespace pfaffcubic
