#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wmn/matrix.hpp"

namespace wmn {

/// Element of gl(M,N): indices 0..M-1 are even, M..M+N-1 are odd.
struct GlElement {
  int M = 0;
  int N = 0;
  Matrix a;

  GlElement() = default;
  GlElement(int M_, int N_);
  static GlElement unit(int M, int N, int row, int col, const Scalar& c = 1);

  int size() const { return M + N; }
  int index_parity(int i) const { return i >= M ? 1 : 0; }
  /// Parity if homogeneous; zero counts as even.
  std::optional<int> parity() const;
  /// Part of the given parity.
  GlElement part(int p) const;

  GlElement& operator+=(const GlElement& o);
  GlElement& operator-=(const GlElement& o);
  friend GlElement operator+(GlElement x, const GlElement& y) { return x += y; }
  friend GlElement operator-(GlElement x, const GlElement& y) { return x -= y; }
  friend GlElement operator*(const Scalar& c, GlElement x) {
    x.a *= c;
    return x;
  }
  bool operator==(const GlElement& o) const = default;
};

/// xy - (-1)^{|x||y|} yx, extended bilinearly over the parity parts.
GlElement gl_bracket(const GlElement& x, const GlElement& y);

/// Finite-dimensional representation: rho[a*(M+N)+b] is the matrix of e_ab.
struct GlRep {
  int M = 0;
  int N = 0;
  int dim = 0;
  std::vector<int> parity;
  std::vector<Matrix> rho;

  int size() const { return M + N; }
  int index_parity(int a) const { return a >= M ? 1 : 0; }
  const Matrix& e(int a, int b) const { return rho[static_cast<std::size_t>(a * size() + b)]; }
  Matrix& e(int a, int b) { return rho[static_cast<std::size_t>(a * size() + b)]; }
  Matrix act(const GlElement& x) const;
};

GlRep trivial_rep(int M, int N);
GlRep natural_rep(int M, int N);
/// One-dimensional character x -> c * str(x).
GlRep supertrace_rep(int M, int N, const Scalar& c);
GlRep tensor_rep(const GlRep& a, const GlRep& b);

/// Resolves "trivial", "natural", "natural⊗natural" (also "natural*natural"),
/// or "str:c".
GlRep rep_by_name(const std::string& name, int M, int N);

struct RepCheck {
  bool ok = true;
  std::string failure;
};

/// Homomorphism property on all generator pairs plus parity compatibility.
RepCheck rep_check(const GlRep& r);

using Vec = std::vector<Scalar>;

/// Smallest invariant subspace containing the seeds, in reduced echelon form.
std::vector<Vec> submodule_closure(const GlRep& r, const std::vector<Vec>& seeds);

/// Action on the coordinates complementary to the pivots of sub; throws
/// DomainError when sub is not invariant.
GlRep quotient_rep(const GlRep& r, const std::vector<Vec>& sub);

/// Every basis vector and `random_vectors` random combinations generate the
/// whole space. A necessary condition for simplicity only.
bool likely_simple(const GlRep& r, int random_vectors, std::uint64_t seed);

}  // namespace wmn
