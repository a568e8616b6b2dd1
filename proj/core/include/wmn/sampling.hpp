#pragma once

#include <cstdint>
#include <random>

#include "wmn/tensor_module.hpp"
#include "wmn/vector_field.hpp"

namespace wmn {

/// Seeded source of random algebra elements. Draws use plain modular
/// reduction of mt19937_64 output so a seed gives the same stream everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// Nonzero rational a/b with |a| <= 5, 1 <= b <= 3.
  Scalar rational();

  /// Laurent exponents in [-radius, radius] on the algebra's coefficient slots.
  std::vector<int> exponents(const Algebra& alg, int radius);
  Monomial monomial(const Algebra& alg, int radius);
  Monomial monomial(const Algebra& alg, int radius, int parity);
  Generator generator(const Algebra& alg);

  /// Homogeneous field: `terms` basis fields of one parity with random coefficients.
  VectorField field(const Algebra& alg, int terms, int radius, int parity);
  /// Homogeneous field of random parity.
  VectorField field(const Algebra& alg, int terms, int radius);
  SuperPoly poly(const Algebra& alg, int terms, int radius);
  SuperPoly homogeneous_poly(const Algebra& alg, int terms, int radius, int parity);

  TensorVector tensor_vector(const TensorModuleSpec& spec, int terms, int radius);
  TensorVector homogeneous_tensor_vector(const TensorModuleSpec& spec, int terms, int radius, int parity);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace wmn
