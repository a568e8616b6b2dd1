#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmn/gl.hpp"
#include "wmn/vector_field.hpp"

namespace wmn {

/// How an odd rho(e) acting on V passes the Grassmann factor g.
enum class OddPassSign {
  Koszul,  // (-1)^{|g|}
  Plain,   // no sign
};

struct TensorModuleSpec {
  Algebra alg;
  GlRep V;
  /// Indexed by even slot; slot 0 holds lambda_0 for W(m,n) ⋉ A d_0 and W(m+1,n).
  std::vector<Scalar> lambda;
  OddPassSign odd_sign = OddPassSign::Koszul;
  /// Planted defect for negative tests: flips the sign of the odd-derivation rows.
  bool planted_defect = false;

  /// Slots of the t-variables that V sees as gl even indices 0..M-1.
  std::vector<int> gl_slots() const;
  int gl_even(int slot) const;
  int gl_odd(int alpha) const { return V.M + alpha - 1; }
  /// Throws ContextMismatch when V or lambda does not fit the algebra.
  void validate() const;
};

TensorModuleSpec make_tensor_spec(Algebra alg, GlRep V, std::vector<Scalar> lambda_by_slot);

struct TensorKey {
  Monomial mono;
  int v = 0;
  auto operator<=>(const TensorKey&) const = default;
  bool operator==(const TensorKey&) const = default;
};

/// Element of A ⊗ V.
class TensorVector {
 public:
  using Terms = std::map<TensorKey, Scalar>;

  TensorVector() = default;
  TensorVector(int m, int n) : m_(m), n_(n) {}

  static TensorVector basis(int m, int n, const Monomial& mono, int v, const Scalar& c = 1);

  int m() const { return m_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TensorKey& key, const Scalar& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector& operator*=(const Scalar& c);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend TensorVector operator*(const Scalar& c, TensorVector a) { return a *= c; }
  bool operator==(const TensorVector& o) const = default;

 private:
  int m_ = 0;
  int n_ = 0;
  Terms terms_;
};

int parity(const TensorModuleSpec& spec, const TensorKey& key);
std::optional<int> parity(const TensorModuleSpec& spec, const TensorVector& w);

/// h'-weight lambda + r over gl_slots(); nullopt when w mixes weights.
std::optional<std::vector<Scalar>> weight(const TensorModuleSpec& spec, const TensorVector& w);

TensorVector act(const TensorModuleSpec& spec, const VectorField& x, const TensorVector& w);

/// act([X,Y],w) == X(Y w) - (-1)^{|X||Y|} Y(X w).
bool module_axiom_check(const TensorModuleSpec& spec, const VectorField& x, const VectorField& y, const TensorVector& w);

/// 2^n dim V on lambda + Z^k, else 0.
long multiplicity(const TensorModuleSpec& spec, const std::vector<Scalar>& mu);

struct WindowReport {
  int radius = 0;
  /// Closure dimension per weight offset r in the cube |r| <= 3B.
  std::map<std::vector<int>, int> dims;
  int full_dim_per_weight = 0;
  int total = 0;
  bool proper = false;
};

/// Closure of the seeds under all basis fields with |s| <= B, truncated to the
/// support window |r| <= 3B. A smaller-than-full result is evidence of a proper
/// submodule.
WindowReport window_submodule_search(const TensorModuleSpec& spec, int radius, const std::vector<TensorVector>& seeds);

std::string to_string(const TensorVector& w);

}  // namespace wmn
