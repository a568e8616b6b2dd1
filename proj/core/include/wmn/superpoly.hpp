#pragma once

#include <map>
#include <optional>
#include <string>

#include "wmn/monomial.hpp"
#include "wmn/scalar.hpp"

namespace wmn {

/// Element of R ⊗ Λ(xi_1..xi_n): a finite sum of c * t^r xi^p with exact
/// coefficients. Zero coefficients are never stored.
class SuperPoly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  SuperPoly() = default;
  SuperPoly(int m, int n);

  static SuperPoly one(int m, int n);
  static SuperPoly constant(int m, int n, const Scalar& c);
  static SuperPoly monomial(int m, int n, const Monomial& mono, const Scalar& c = 1);
  static SuperPoly t(int m, int n, int slot, int power = 1);
  static SuperPoly xi(int m, int n, int alpha);

  int m() const { return m_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Parity if homogeneous; zero counts as even.
  std::optional<int> parity() const;

  void add_term(const Monomial& mono, const Scalar& c);

  SuperPoly& operator+=(const SuperPoly& other);
  SuperPoly& operator-=(const SuperPoly& other);
  SuperPoly& operator*=(const Scalar& c);

  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator-(SuperPoly a) { return a *= Scalar(-1); }
  friend SuperPoly operator*(const Scalar& c, SuperPoly a) { return a *= c; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);

  bool operator==(const SuperPoly& other) const {
    return m_ == other.m_ && n_ == other.n_ && terms_ == other.terms_;
  }

  void check_monomial(const Monomial& mono) const;

 private:
  int m_ = 0;
  int n_ = 0;
  Terms terms_;
};

/// Supercommutative product; throws ContextMismatch when (m, n) differ.
SuperPoly mul(const SuperPoly& a, const SuperPoly& b);

/// Odd left derivation d/dxi_alpha.
SuperPoly left_deriv(int alpha, const SuperPoly& f);

/// Odd right derivation (f) *d_alpha.
SuperPoly right_deriv(const SuperPoly& f, int alpha);

/// Euler operator d_i = t_i d/dt_i; slot 0 is d_0.
SuperPoly even_deriv(int i, const SuperPoly& f);

std::string to_string(const Monomial& mono);
std::string to_string(const SuperPoly& f);

}  // namespace wmn
