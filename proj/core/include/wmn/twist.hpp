#pragma once

#include <set>
#include <string>
#include <vector>

#include "wmn/vector_field.hpp"

namespace wmn {

/// Square integer matrix; twisting requires it to lie in GL_{m+1}(Z).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::vector<std::vector<long>> rows);

  static IntMatrix identity(int n);
  /// Swaps slots a and b.
  static IntMatrix permutation(int n, int a, int b);

  int size() const { return static_cast<int>(rows_.size()); }
  long operator()(int i, int j) const { return rows_[i][j]; }

  long determinant() const;
  bool is_unimodular() const;
  /// Exact inverse; throws DomainError unless det = ±1.
  IntMatrix inverse() const;
  IntMatrix transpose() const;

  std::vector<int> apply(const std::vector<int>& v) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

 private:
  std::vector<std::vector<long>> rows_;
};

/// Parses "a,b;c,d" into a square matrix.
IntMatrix parse_int_matrix(const std::string& text);
std::string to_string(const IntMatrix& m);

/// theta acting on polynomials of R_{m+1} ⊗ Λ: t^s -> t^{theta s}, xi fixed.
SuperPoly twist_poly(const IntMatrix& theta, const SuperPoly& f);

/// Conjugation theta ∘ X ∘ theta^{-1} on W(m+1, n).
VectorField twist_field(const IntMatrix& theta, const VectorField& x);

using WeightVector = std::vector<Scalar>;

/// Applies (theta^{-1})^T to each weight.
std::set<WeightVector> support_transform(const IntMatrix& theta, const std::set<WeightVector>& support);

/// Coset representative: integer entries become 0, the rest are kept.
std::vector<Scalar> normalize_coset(const std::vector<Scalar>& lambda);

}  // namespace wmn
