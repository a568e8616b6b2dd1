#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wmn/tensor_module.hpp"
#include "wmn/uenv.hpp"
#include "wmn/vector_field.hpp"

namespace wmn {

/// (V_-, V_0, V_+) parts of a W(m+1, n) field by ad(d_0)-eigenvalue, the t_0 exponent.
/// The V_0 part is returned in the semidirect algebra W(m,n) ⋉ A d_0.
std::array<VectorField, 3> triangular_parts(const VectorField& x);

/// Highest weight data: the algebra W(m+1, n) and a tensor module T over its
/// degree-zero part, on which V_+ acts by zero.
struct HwSpec {
  int m = 0;
  int n = 0;
  TensorModuleSpec T;
  /// |t_i| bound (i >= 1) for T vectors and V_-/V_+ letters; unused when m = 0.
  int window = 0;

  Algebra big() const { return Algebra{Kind::Wm1n, m, n}; }
  bool exact() const { return m == 0; }
};

/// T(V, lambda) over W(m,n) ⋉ A d_0; lambda has m+1 slots with slot 0 = lambda_0.
HwSpec make_hw_spec(GlRep V, std::vector<Scalar> lambda, int window = 0);

/// Vectors of M(T) = U(V_-) ⊗ T: PBW-ordered word in V_- times a T basis vector.
using VermaKey = std::pair<Word, TensorKey>;
using VermaVector = std::map<VermaKey, Scalar>;

int verma_degree(const VermaKey& k);

/// x (a field of W(m+1, n)) acting on M(T).
VermaVector verma_act(const HwSpec& hw, const VectorField& x, const VermaVector& v);

/// V_- letters of degree -d..-1 and T vectors inside the window.
std::vector<FieldKey> lowering_letters(const HwSpec& hw, int depth);
std::vector<FieldKey> raising_letters(const HwSpec& hw, int max_degree = 2);
std::vector<TensorKey> t_basis(const HwSpec& hw);
/// Basis of M_{-d}.
std::vector<VermaKey> verma_basis(const HwSpec& hw, int d);

struct RadicalReport {
  int depth = 0;
  int raise_depth = 0;
  std::vector<long> m_dims;
  std::vector<long> radical_dims;
  std::vector<long> quotient_dims;
  /// radical_by_E[e][d]: radical dimension at degree -d using raising words of length <= e+1.
  std::vector<std::vector<long>> radical_by_E;
  /// Smallest raise-depth from which all radical dims stay constant up to raise_depth.
  int stable_from = 0;
  bool windowed = false;
};

/// Candidate radical: v in M_{-d} killed into T by every word of length <= E in the
/// degree 1 and 2 raising letters. A superset of the true radical within the window.
RadicalReport radical_at(const HwSpec& hw, int depth, int raise_depth);

/// dim L(T)_{-d} for d = 0..depth (window dims when m >= 1).
std::vector<long> lt_dims(const HwSpec& hw, int depth, int raise_depth);

std::string to_string(const VermaVector& v);

}  // namespace wmn
