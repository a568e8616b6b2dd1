#pragma once

#include <map>
#include <string>
#include <vector>

#include "wmn/tensor_module.hpp"
#include "wmn/vector_field.hpp"

namespace wmn {

/// A word in basis fields; the leftmost letter acts last.
using Word = std::vector<FieldKey>;

/// Element of the enveloping algebra, as a combination of words.
class UEnv {
 public:
  using Terms = std::map<Word, Scalar>;

  UEnv() = default;
  explicit UEnv(Algebra alg) : alg_(alg) {}
  static UEnv word(Algebra alg, Word w, const Scalar& c = 1);

  const Algebra& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const Scalar& c);
  UEnv& operator+=(const UEnv& o);
  UEnv& operator-=(const UEnv& o);
  UEnv& operator*=(const Scalar& c);
  friend UEnv operator+(UEnv a, const UEnv& b) { return a += b; }
  friend UEnv operator-(UEnv a, const UEnv& b) { return a -= b; }
  friend UEnv operator*(const Scalar& c, UEnv a) { return a *= c; }
  bool operator==(const UEnv& o) const { return alg_ == o.alg_ && terms_ == o.terms_; }

 private:
  Algebra alg_{};
  Terms terms_;
};

/// Concatenation product.
UEnv operator*(const UEnv& a, const UEnv& b);
UEnv letter(const VectorField& x);

/// ad(d_0)-degree of a basis field: its t_0 exponent (0 when there is no t_0).
int d0_degree(const FieldKey& k);

/// PBW order: even before odd, then d_0-degree, then t-exponents, Grassmann part, generator.
bool pbw_less(const FieldKey& a, const FieldKey& b);
bool is_pbw_ordered(const Word& w);

/// Straightens every word with xy = (-1)^{xy} yx + [x, y] and x^2 = [x, x]/2 for odd x.
UEnv pbw_normalize(const UEnv& u);

/// u acting on a tensor module vector, rightmost letter first.
TensorVector act(const TensorModuleSpec& spec, const UEnv& u, const TensorVector& w);

/// sum_{a=0}^{l} (-1)^a C(l,a) (t_i^{p+a} d_i)(t_i^{q-a} d_i).
UEnv omega(const Algebra& alg, int ell, int p, int q, int i);

/// sum_{a=0}^{N} (-1)^a C(N,a) (t^p t_i^a xi^r target)(t_i^{q-a} d_i); p has one slot per even variable
/// position (slot 0 included), q is an integer.
UEnv ann_ops(const Algebra& alg, int N, const std::vector<int>& p, int q, grassmann::Bits r, int i, Generator target);

std::string to_string(const Word& w);
std::string to_string(const UEnv& u);

}  // namespace wmn
