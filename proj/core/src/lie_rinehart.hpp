#pragma once

// Shared bracket plumbing for Λ-prefixed generators (smash and jet elements).

#include "wmn/smash.hpp"

namespace wmn::detail {

template <class Elem>
struct Sink {
  Elem& out;
  Scalar scale;

  // Adds c * (prefix) * g; a zero signed prefix is dropped.
  void add(const Scalar& c, const SignedMono& prefix, const GenKey& g) {
    if (c == 0 || prefix.c == 0) return;
    out.add_term(PrefKey{prefix.bits, g}, scale * c * prefix.c);
  }
  void add(const Scalar& c, grassmann::Bits prefix, const GenKey& g) { add(c, SignedMono{1, prefix}, g); }
};

// [pX, qY] = p X(q) Y - (-1)^{(|p|+|X|)(|q|+|Y|)} q Y(p) X + (-1)^{|X||q|} pq [X,Y].
template <class Elem, class Base, class Anchor>
Elem prefixed_bracket(const Elem& a, const Elem& b, Base base, Anchor anchor) {
  a.check(b);
  Elem out(a.m(), a.n());
  for (const auto& [ka, ca] : a.terms()) {
    const int pa = ka.parity();
    const int xbar = ka.gen.parity();
    for (const auto& [kb, cb] : b.terms()) {
      const int pb = kb.parity();
      const Scalar c = ca * cb;
      SignedMono xq = anchor(ka.gen, kb.prefix);
      if (xq.c != 0) {
        SignedMono pre = mono_product(ka.prefix, xq);
        if (pre.c != 0) out.add_term(PrefKey{pre.bits, kb.gen}, c * pre.c);
      }
      SignedMono yp = anchor(kb.gen, ka.prefix);
      if (yp.c != 0) {
        SignedMono pre = mono_product(kb.prefix, yp);
        if (pre.c != 0) out.add_term(PrefKey{pre.bits, ka.gen}, -c * pre.c * sign_pow(pa * pb));
      }
      SignedMono pq = mono_product(ka.prefix, kb.prefix);
      if (pq.c == 0) continue;
      Elem inner = base(ka.gen, kb.gen);
      Scalar s = c * pq.c * sign_pow(xbar * grassmann::parity(kb.prefix));
      for (const auto& [k, v] : inner.terms()) {
        SignedMono pre = mono_product(pq.bits, k.prefix);
        if (pre.c != 0) out.add_term(PrefKey{pre.bits, k.gen}, s * v * pre.c);
      }
    }
  }
  return out;
}

}  // namespace wmn::detail
