#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmn/superpoly.hpp"

namespace wmn {

/// W(m,n), W(m,n) ⋉ A d_0, or W(m+1,n). In all three the even slots are
/// numbered 0..m with slot 0 belonging to t_0 / d_0.
enum class Kind { Wmn, WmnSemidirectD0, Wm1n };

struct Algebra {
  Kind kind = Kind::Wmn;
  int m = 0;
  int n = 0;

  bool operator==(const Algebra&) const = default;

  bool has_d0() const { return kind != Kind::Wmn; }
  bool allows_t0() const { return kind == Kind::Wm1n; }
  /// Slots whose d_i belong to the Cartan part h'.
  std::vector<int> even_slots() const;
  int even_count() const { return static_cast<int>(even_slots().size()); }
};

std::string to_string(Kind k);
Kind parse_kind(const std::string& s);

/// d_i (even) or d/dxi_alpha (odd).
struct Generator {
  enum class Type : std::uint8_t { D, P };
  Type type = Type::D;
  int index = 0;

  auto operator<=>(const Generator&) const = default;
  bool operator==(const Generator&) const = default;

  int parity() const { return type == Type::P ? 1 : 0; }
  static Generator d(int i) { return {Type::D, i}; }
  static Generator p(int alpha) { return {Type::P, alpha}; }
};

std::string to_string(const Generator& g);

/// Basis element t^r xi^p * gen.
struct FieldKey {
  Monomial mono;
  Generator gen;

  auto operator<=>(const FieldKey&) const = default;
  bool operator==(const FieldKey&) const = default;

  int parity() const { return mono.parity() ^ gen.parity(); }
};

class VectorField {
 public:
  using Terms = std::map<FieldKey, Scalar>;

  VectorField() = default;
  explicit VectorField(Algebra alg) : alg_(alg) {}

  static VectorField basis(Algebra alg, const Monomial& mono, Generator gen, const Scalar& c = 1);
  /// f * gen for a coefficient polynomial f.
  static VectorField from_poly(Algebra alg, const SuperPoly& f, Generator gen);

  const Algebra& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::optional<int> parity() const;

  /// Throws ContextMismatch when the term violates the algebra's constraints.
  void validate(const FieldKey& key) const;
  void add_term(const FieldKey& key, const Scalar& c);

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const Scalar& c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Scalar& c, VectorField a) { return a *= c; }
  bool operator==(const VectorField& o) const { return alg_ == o.alg_ && terms_ == o.terms_; }

  /// Left A-module structure: (f X) = sum f * coefficient * gen.
  friend VectorField operator*(const SuperPoly& f, const VectorField& x);

 private:
  Algebra alg_;
  Terms terms_;
};

/// Action of a generator on a polynomial (d_i or d/dxi_alpha).
SuperPoly apply_generator(Generator g, const SuperPoly& f);

/// X(f) for a vector field acting as a superderivation.
SuperPoly apply(const VectorField& x, const SuperPoly& f);

/// Super Lie bracket, term by term: [f a, g b] = f a(g) b - (-1)^{..} g b(f) a.
VectorField bracket(const VectorField& x, const VectorField& y);

/// Bracket of two basis elements with unit coefficients.
VectorField bracket(const Algebra& alg, const FieldKey& a, const FieldKey& b);

/// h'-weight restricted to the algebra's Cartan slots; nullopt when mixed.
std::optional<std::vector<int>> h_weight(const VectorField& x);

std::string to_string(const FieldKey& key);
std::string to_string(const VectorField& x);

}  // namespace wmn
