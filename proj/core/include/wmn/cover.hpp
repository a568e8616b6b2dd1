#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmn/superpoly.hpp"
#include "wmn/tensor_module.hpp"
#include "wmn/uenv.hpp"
#include "wmn/vector_field.hpp"

namespace wmn {

struct CoverKey {
  FieldKey tau;
  TensorKey u;
  auto operator<=>(const CoverKey&) const = default;
  bool operator==(const CoverKey&) const = default;
};

/// Formal combination of functionals psi(tau, u): g -> (-1)^{(|tau|+|u|)|g|} (g tau) u.
/// Equality of the functionals is decided by evaluation (eval_equal).
class CoverElement {
 public:
  using Terms = std::map<CoverKey, Scalar>;

  CoverElement() = default;
  explicit CoverElement(Algebra alg) : alg_(alg) {}

  const Algebra& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const CoverKey& k, const Scalar& c);
  CoverElement& operator+=(const CoverElement& o);
  CoverElement& operator-=(const CoverElement& o);
  CoverElement& operator*=(const Scalar& c);
  friend CoverElement operator+(CoverElement a, const CoverElement& b) { return a += b; }
  friend CoverElement operator-(CoverElement a, const CoverElement& b) { return a -= b; }
  friend CoverElement operator*(const Scalar& c, CoverElement a) { return a *= c; }
  bool operator==(const CoverElement& o) const = default;

 private:
  Algebra alg_{};
  Terms terms_;
};

/// psi(tau, u) extended bilinearly.
CoverElement psi(const VectorField& tau, const TensorVector& u);

TensorVector psi_eval(const TensorModuleSpec& spec, const CoverElement& c, const SuperPoly& g);

/// f psi(tau, u) = psi(f tau, u).
CoverElement cover_act(const SuperPoly& f, const CoverElement& c);
/// eta psi(tau, u) = psi([eta, tau], u) + (-1)^{|eta||tau|} psi(tau, eta u).
CoverElement cover_act(const TensorModuleSpec& spec, const VectorField& eta, const CoverElement& c);

/// pi(psi(tau, u)) = tau u.
TensorVector pi(const TensorModuleSpec& spec, const CoverElement& c);

/// Monomials t^r xi^p with |r_i| <= W on every coefficient slot.
std::vector<Monomial> evaluation_window(const Algebra& alg, int W);
bool eval_equal(const TensorModuleSpec& spec, const CoverElement& a, const CoverElement& b, int W = 3);

/// Ranges for the annihilation sweeps: |p_i| <= p_radius, |q| <= q_radius, and
/// module basis vectors t^k xi^e v with |k_i| <= k_radius.
struct AnnWindow {
  int p_radius = 2;
  int q_radius = 2;
  int k_radius = 2;
};

std::vector<TensorKey> window_basis(const TensorModuleSpec& spec, int radius);

/// True when omega(l, p, q, i) kills every window vector for all i, p, q.
bool omega_annihilates(const TensorModuleSpec& spec, int ell, const AnnWindow& win);
/// Smallest l <= bound with omega_annihilates; nullopt when none.
std::optional<int> minimal_ell(const TensorModuleSpec& spec, int bound, const AnnWindow& win);

/// True when every ann_ops(N, ...) instance in the window kills every window vector.
bool ann_annihilates(const TensorModuleSpec& spec, int N, const AnnWindow& win);
/// Smallest N <= bound with ann_annihilates; throws DomainError when the bound is exhausted.
int minimal_N_search(const TensorModuleSpec& spec, int bound, const AnnWindow& win);

/// Rewrites psi(t^{k-s} xi^r X, u), u of t-exponent s, until every |s_i| <= N/2.
/// Throws DomainError when a d_i-eigenvalue to be inverted is zero.
CoverElement window_reduce(const TensorModuleSpec& spec, const CoverElement& c, int N);

/// max |s_i| over the module vectors of c.
int cover_spread(const CoverElement& c);

/// (generators) 2^n (2 floor(N/2) + 1)^m dim(Λ ⊗ V): number of psi(tau, u) with basis tau, u
/// of fixed total weight and |s| <= N/2.
long cover_span_bound(const TensorModuleSpec& spec, int N);
/// Largest number of distinct basis psi's of c sharing one total t-exponent.
long cover_weight_count(const CoverElement& c);

std::string to_string(const CoverElement& c);

}  // namespace wmn
