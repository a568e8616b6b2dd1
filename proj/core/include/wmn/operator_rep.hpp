#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wmn/gl.hpp"
#include "wmn/jets.hpp"
#include "wmn/matrix.hpp"
#include "wmn/smash.hpp"
#include "wmn/tensor_module.hpp"

namespace wmn {

/// Finite-dimensional Λ-module U with an action of (A#V)_0, given on
/// prefix-free generators D_i(f, r), Delta_alpha(f, r), D_0(f, r).
struct FiberModule {
  int m = 0;
  int n = 0;
  int dim = 0;
  bool has_d0 = false;
  std::vector<int> parity;
  /// Left multiplication by xi_alpha, alpha = 1..n at position alpha - 1.
  std::vector<Matrix> xi;
  std::function<Matrix(const GenKey&)> smash;
};

/// [A, B] = AB - (-1)^{ab} BA.
Matrix supercommutator(const Matrix& a, int pa, const Matrix& b, int pb);

/// Left multiplication by xi^p on U.
Matrix lambda_op(int dim, const std::vector<Matrix>& xi, grassmann::Bits p);
Matrix smash_op(const FiberModule& u, const SmashElement& x);

/// Λ ⊗ V, basis index p * dim V + j, with
/// D_j(f,s) = lambda_j f + sum_i s_i f ⊗ rho(e_ij) + sum_a (f)*d_a ⊗ rho(e_aj),
/// Delta_b(f,s) = f d/dxi_b + sum_i s_i f ⊗ rho(e_ib) + sum_a (f)*d_a ⊗ rho(e_ab),
/// D_0(f,s) = lambda_0 f. Operators a ⊗ B act with the Koszul sign (-1)^{|B||g|}.
/// `planted_quadratic` adds c s_j^2 f to D_j, producing a non-module for negative tests.
struct TensorFiberOptions {
  bool has_d0 = false;
  Scalar planted_quadratic = 0;
};
FiberModule tensor_fiber(const GlRep& V, const std::vector<Scalar>& lambda_by_slot, TensorFiberOptions opts = {});

/// The root space t^r (sum Λ d_i + sum Λ d/dxi_a) of the adjoint module, basis
/// index p * (m+n) + b; the action t^{-s}[t^s f gen, u] is computed from the
/// bracket of vector fields. D_0(f, s) acts as lambda_0 f.
FiberModule adjoint_root_fiber(int m, int n, const std::vector<int>& r, const Scalar& lambda0, bool has_d0);

/// Operators of the jets on U; keys are prefix-free jet generators, missing keys are zero.
struct JetRep {
  int m = 0;
  int n = 0;
  int dim = 0;
  bool has_d0 = false;
  int degree = 0;
  std::vector<int> parity;
  std::vector<Matrix> xi;
  std::map<GenKey, Matrix> ops;

  Matrix zero() const { return Matrix(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)); }
  Matrix op(const GenKey& g) const;
};

Matrix jet_op(const JetRep& rep, const JetElement& x);

/// Recovers the jets from the operator family by exact interpolation on
/// |r| <= degree; throws DomainError when extra points show a higher degree.
JetRep fit_jets(const FiberModule& u, int degree = 3);

/// D(f, r) = sum_k r^k / k! * (jet of degree k), as an operator.
Matrix expand_eval(const JetRep& rep, GenTag tag, int index, grassmann::Bits f, const std::vector<int>& r);

/// The explicit jet list for the adjoint root fiber.
JetRep adjoint_root_jets(int m, int n, const std::vector<int>& r, const Scalar& lambda0, bool has_d0);

/// Prefix-free generators with f over all Grassmann monomials.
std::vector<GenKey> smash_generators(int m, int n, bool has_d0, int window);
std::vector<GenKey> jet_generators(int m, int n, bool has_d0, int degree);

struct RelationReport {
  long checked = 0;
  long failed = 0;
  std::string first_failure;
  bool ok() const { return failed == 0; }
};

/// Commutator table as operator identities on U, plus the Λ-compatibility
/// [X, xi_a] = X(xi_a), over all generator pairs with |r|_inf <= window.
RelationReport check_smash_relations(const FiberModule& u, int window);

/// Jet relations as operator identities on a jet representation, all pairs of
/// generators with |k| <= degree, plus the Λ rules.
RelationReport check_jet_relations(const JetRep& rep, int degree);

/// Jets of degree > bound that are nonzero.
RelationReport check_jet_degree_bound(const JetRep& rep, int bound);

}  // namespace wmn
