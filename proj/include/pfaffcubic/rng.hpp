#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pfaffcubic/linalg.hpp"
#include "pfaffcubic/poly.hpp"

namespace pfaffcubic {

/// The single source of randomness for searches; everything is derived from
/// the seed so runs are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen_); }
  /// Uniform over F_p, or a small integer in [-bound, bound] over Q.
  Scalar scalar(const FieldSpec& f, int bound = 9);
  Scalar nonzero_scalar(const FieldSpec& f, int bound = 9);
  std::vector<Scalar> vector(const FieldSpec& f, int n, int bound = 9);
  MultiPoly form(const FieldSpec& f, int nvars, int degree, int bound = 9);
  Matrix invertible_matrix(const FieldSpec& f, int n, int bound = 9);

 private:
  std::mt19937_64 gen_;
};

}  // namespace pfaffcubic
