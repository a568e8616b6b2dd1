#pragma once

// Independent model of A#V: elements are sums of a ⊗ eta with a in A and eta a
// basis field, bracketed with the Lie-Rinehart formula for a ⊗ eta.

#include <map>
#include <utility>

#include "wmn/smash.hpp"
#include "wmn/vector_field.hpp"

namespace oracle {

using wmn::Scalar;

struct AVKey {
  wmn::Monomial a;
  wmn::FieldKey eta;
  auto operator<=>(const AVKey&) const = default;
  bool operator==(const AVKey&) const = default;
};

using AV = std::map<AVKey, Scalar>;

inline void add(AV& x, const AVKey& k, const Scalar& c) {
  if (c == 0) return;
  Scalar& v = x[k];
  v += c;
  if (v == 0) x.erase(k);
}

inline wmn::Algebra smash_algebra(int m, int n) { return {wmn::Kind::WmnSemidirectD0, m, n}; }

// p * X(f, r) -> t^{-r} xi^p ⊗ t^r xi^f gen
inline AV embed(const wmn::SmashElement& x) {
  AV out;
  for (const auto& [k, c] : x.terms()) {
    std::vector<int> neg(k.gen.r.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -k.gen.r[i];
    wmn::Generator g = k.gen.tag == wmn::GenTag::P    ? wmn::Generator::p(k.gen.index)
                       : k.gen.tag == wmn::GenTag::D0 ? wmn::Generator::d(0)
                                                      : wmn::Generator::d(k.gen.index);
    add(out, AVKey{wmn::Monomial{neg, k.prefix}, wmn::FieldKey{wmn::Monomial{k.gen.r, k.gen.f}, g}}, c);
  }
  return out;
}

inline AV bracket(int m, int n, const AV& x, const AV& y) {
  using namespace wmn;
  Algebra alg = smash_algebra(m, n);
  AV out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      SuperPoly a = SuperPoly::monomial(m, n, kx.a);
      SuperPoly b = SuperPoly::monomial(m, n, ky.a);
      VectorField eta = VectorField::basis(alg, kx.eta.mono, kx.eta.gen);
      VectorField tau = VectorField::basis(alg, ky.eta.mono, ky.eta.gen);
      int pa = kx.a.parity(), pe = kx.eta.parity(), pb = ky.a.parity(), pt = ky.eta.parity();
      Scalar c = cx * cy;
      SuperPoly t1 = a * apply(eta, b);
      for (const auto& [mono, v] : t1.terms()) add(out, AVKey{mono, ky.eta}, c * v);
      SuperPoly t2 = b * apply(tau, a);
      for (const auto& [mono, v] : t2.terms()) add(out, AVKey{mono, kx.eta}, -c * v * sign_pow((pa + pe) * (pb + pt)));
      SuperPoly ab = a * b;
      VectorField br = wmn::bracket(eta, tau);
      for (const auto& [ma, va] : ab.terms()) {
        for (const auto& [kf, vf] : br.terms()) add(out, AVKey{ma, kf}, c * va * vf * sign_pow(pe * pb));
      }
    }
  }
  return out;
}

}  // namespace oracle
