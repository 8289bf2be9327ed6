#pragma once

#include <array>
#include <string>
#include <vector>

namespace pfaffcubic {

/// Class d*l - ... written as (d; m1..m6) in the basis (l, e1, ..., e6) of the
/// Picard lattice of a cubic surface blown up from six points.
struct LatticeClass {
  std::array<int, 7> c{};

  static LatticeClass line() { return {{1, 0, 0, 0, 0, 0, 0}}; }
  static LatticeClass exceptional(int i);  // e_i, 1 <= i <= 6
  /// K = -3l + e1 + ... + e6.
  static LatticeClass canonical() { return {{-3, 1, 1, 1, 1, 1, 1}}; }
  /// Accepts "(4,0,-2,-2,-1,-1,-1)" or whitespace/comma separated integers.
  static LatticeClass parse(const std::string& text);

  friend LatticeClass operator+(LatticeClass a, const LatticeClass& b) {
    for (int i = 0; i < 7; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend LatticeClass operator-(LatticeClass a, const LatticeClass& b) {
    for (int i = 0; i < 7; ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend LatticeClass operator*(int k, LatticeClass a) {
    for (auto& x : a.c) x *= k;
    return a;
  }
  LatticeClass operator-() const { return -1 * *this; }
  friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
  friend auto operator<=>(const LatticeClass&, const LatticeClass&) = default;

  std::string to_string() const;
};

/// The pairing diag(1, -1, ..., -1).
int pair(const LatticeClass& a, const LatticeClass& b);

/// All D with D^2 = D.K = -1 (27 classes), in lexicographic order.
const std::vector<LatticeClass>& minus_one_classes();
/// All D with D^2 = -2, D.K = 0 (72 classes), in lexicographic order.
const std::vector<LatticeClass>& roots();

/// Roots with pairwise non-negative pairings.
struct RootConfig {
  std::vector<LatticeClass> roots;

  /// Throws DomainError unless every entry is a root and pairings are >= 0.
  void validate() const;
  /// Dynkin type of the pairing graph, e.g. "3A1", "A2", "A1+A2", "D4".
  std::string ade_type() const;
};

/// A (-1)-class E with E.R1 = 1 and E.Ri = 0 for the other roots of an rA1
/// configuration (r <= 3). Throws DomainError for other configurations and
/// SearchExhausted if none of the 27 classes works.
LatticeClass find_disjoint_e(const RootConfig& config);

/// D = R - K + 2E for a root R and a (-1)-class E with R.E = 1. The result
/// is checked to satisfy D^2 = D.(-K) = 5 and D.R = D.E = 0.
LatticeClass quintic_class(const LatticeClass& root, const LatticeClass& e);

}  // namespace pfaffcubic
