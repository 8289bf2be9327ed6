#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace pfaffcubic {

/// The coefficient field: the rationals or a prime field F_p with p >= 5.
///
/// Characteristic 2 and 3 are rejected at construction; quadratic forms need 1/2
/// and the cubic normal forms need 1/3.
class FieldSpec {
 public:
  enum class Kind { Rationals, Prime };

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws DomainError unless p is a prime with 5 <= p < 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q", "Q", "QQ", "p:<prime>", "F_<prime>" or a bare prime.
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::Prime; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

namespace detail {
struct ModValue {
  std::uint32_t v = 0;
  std::uint32_t p = 0;  // 0 marks the untyped zero
};
}  // namespace detail

/// An element of a FieldSpec. Prime-field elements carry their modulus; a
/// default-constructed Scalar is a field-agnostic zero that adopts the field of
/// whatever it is combined with.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long long v);
  /// Throws DomainError when the denominator is divisible by the characteristic.
  static Scalar from_rational(const FieldSpec& f, const mpq_class& q);

  bool is_zero() const;
  bool is_one() const;
  /// True when the value is "negative" for printing purposes (rationals only).
  bool is_negative() const;

  /// Modulus of a prime-field element, 0 for rationals and untyped zero.
  std::uint32_t modulus() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
  /// Representative in [0, p); requires a prime-field element.
  std::uint32_t residue() const;
  mpq_class rational() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(unsigned long long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Decimal text: residues in [0, p) or a reduced fraction "a/b".
  std::string to_string() const;
  std::size_t hash() const;

 private:
  using Mod = detail::ModValue;
  explicit Scalar(Mod m) : rep_(m) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

  std::variant<Mod, mpq_class> rep_;
};

/// Square test and square root in F_p (Tonelli-Shanks) or Q (exact rational roots).
bool is_square(const Scalar& a);
/// Returns some r with r*r == a; requires is_square(a).
Scalar square_root(const Scalar& a);

}  // namespace pfaffcubic
