#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmn/grassmann.hpp"
#include "wmn/scalar.hpp"

namespace wmn {

enum class GenTag : std::uint8_t { D, P, D0 };

/// Generator X(xi^f, r): D_i / Delta_alpha / D_0 in the smash algebra, or
/// d_i / d/dxi_alpha / d_0 jets. The index vector has m+1 slots, slot 0 unused.
/// For jets it stores the shifted index: d_i(f, k - eps_i) keeps k - eps_i.
struct GenKey {
  GenTag tag = GenTag::D;
  int index = 0;
  grassmann::Bits f = 0;
  std::vector<int> r;

  auto operator<=>(const GenKey&) const = default;
  bool operator==(const GenKey&) const = default;
  int parity() const { return grassmann::parity(f) ^ (tag == GenTag::P ? 1 : 0); }
};

/// prefix * X.
struct PrefKey {
  grassmann::Bits prefix = 0;
  GenKey gen;

  auto operator<=>(const PrefKey&) const = default;
  bool operator==(const PrefKey&) const = default;
  int parity() const { return grassmann::parity(prefix) ^ gen.parity(); }
};

std::string to_string(const GenKey& g, bool shifted);

/// "x1*x3", or "1" for the empty monomial.
std::string xi_string(grassmann::Bits f);

/// Finite Λ-linear combination of generators. The Tag keeps smash elements
/// and jet elements apart at compile time.
template <class Tag>
class LambdaElement {
 public:
  using Terms = std::map<PrefKey, Scalar>;

  LambdaElement() = default;
  LambdaElement(int m, int n) : m_(m), n_(n) {}

  static LambdaElement gen(int m, int n, GenKey g, const Scalar& c = 1, grassmann::Bits prefix = 0) {
    LambdaElement x(m, n);
    x.add_term(PrefKey{prefix, std::move(g)}, c);
    return x;
  }

  int m() const { return m_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PrefKey& k, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::optional<int> parity() const {
    std::optional<int> p;
    for (const auto& [k, c] : terms_) {
      if (p && *p != k.parity()) return std::nullopt;
      p = k.parity();
    }
    return p.value_or(0);
  }

  LambdaElement& operator+=(const LambdaElement& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LambdaElement& operator-=(const LambdaElement& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LambdaElement& operator*=(const Scalar& c) {
    if (c == 0) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
  friend LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }
  friend LambdaElement operator*(const Scalar& c, LambdaElement a) { return a *= c; }
  bool operator==(const LambdaElement& o) const = default;

  /// Left multiplication by xi^p.
  LambdaElement times_prefix(grassmann::Bits p) const {
    LambdaElement out(m_, n_);
    for (const auto& [k, c] : terms_) {
      int s = grassmann::product_sign(p, k.prefix);
      if (s != 0) out.add_term(PrefKey{p | k.prefix, k.gen}, c * s);
    }
    return out;
  }

  void check(const LambdaElement& o) const;

 private:
  int m_ = 0;
  int n_ = 0;
  Terms terms_;
};

struct SmashTag {};
struct JetTag {};
using SmashElement = LambdaElement<SmashTag>;
using JetElement = LambdaElement<JetTag>;

void throw_context_mismatch(const char* what);

template <class Tag>
void LambdaElement<Tag>::check(const LambdaElement& o) const {
  if (m_ != o.m_ || n_ != o.n_) throw_context_mismatch("Λ-combination context mismatch");
}

/// Signed Λ-monomial: c * xi^bits; c == 0 encodes zero.
struct SignedMono {
  int c = 0;
  grassmann::Bits bits = 0;
};

SignedMono mono_product(grassmann::Bits a, grassmann::Bits b);
SignedMono mono_product(const SignedMono& a, grassmann::Bits b);
SignedMono mono_product(grassmann::Bits a, const SignedMono& b);
SignedMono left_deriv_mono(int alpha, grassmann::Bits f);
SignedMono right_deriv_mono(grassmann::Bits f, int alpha);

GenKey smash_D(int i, grassmann::Bits f, std::vector<int> r);
GenKey smash_P(int alpha, grassmann::Bits f, std::vector<int> r);
GenKey smash_D0(grassmann::Bits f, std::vector<int> r);

/// Bracket in (A#V)_0. Prefix-free pairs follow the commutator table; prefixes
/// follow [pX, qY] = p X(q) Y - ± q Y(p) X + (-1)^{|X||q|} pq [X, Y], where only
/// Delta_alpha(h, r) acts on Λ, by h d/dxi_alpha.
SmashElement smash_bracket(const SmashElement& a, const SmashElement& b);

std::string to_string(const SmashElement& x);

}  // namespace wmn
