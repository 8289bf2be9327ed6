#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace pfaffcubic {

inline constexpr int kMaxVars = 8;

/// Exponent vector with cached total degree. Unused trailing slots stay zero.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial variable(int i) {
    Monomial m;
    m.e[i] = 1;
    m.deg = 1;
    return m;
  }
  static Monomial from_exponents(const std::vector<int>& exps);

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] > o.e[i]) return false;
    }
    return true;
  }
  /// Requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
    r.deg = static_cast<std::uint16_t>(o.deg - deg);
    return r;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
    r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return r;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);
  std::size_t hash() const;
};

/// Term orders. DegRevLex is the storage and printing order; the others only
/// appear inside Groebner computations.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Eliminate };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Compares the total degree in the variables of `mask` first, then degrevlex.
  static MonomialOrder eliminate(std::uint32_t mask) { return MonomialOrder(Kind::Eliminate, mask); }

  Kind kind() const { return kind_; }
  std::uint32_t mask() const { return mask_; }

  /// Three-way comparison; positive when a is larger.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::uint32_t mask) : kind_(k), mask_(mask) {}
  Kind kind_;
  std::uint32_t mask_;
};

int degrevlex_compare(const Monomial& a, const Monomial& b);

/// All monomials of total degree d in n variables, in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace pfaffcubic
