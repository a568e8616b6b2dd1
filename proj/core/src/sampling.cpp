#include "wmn/sampling.hpp"

#include "wmn/errors.hpp"

namespace wmn {

int Sampler::uniform(int lo, int hi) {
  if (hi < lo) throw DomainError("empty sampling range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

Scalar Sampler::rational() {
  int a = 0;
  while (a == 0) a = uniform(-5, 5);
  return frac(a, uniform(1, 3));
}

std::vector<int> Sampler::exponents(const Algebra& alg, int radius) {
  std::vector<int> t(static_cast<std::size_t>(alg.m + 1), 0);
  for (int i = alg.allows_t0() ? 0 : 1; i <= alg.m; ++i) t[static_cast<std::size_t>(i)] = uniform(-radius, radius);
  return t;
}

Monomial Sampler::monomial(const Algebra& alg, int radius) {
  Monomial mono{exponents(alg, radius), 0};
  if (alg.n > 0) mono.xi = static_cast<grassmann::Bits>(uniform(0, (1 << alg.n) - 1));
  return mono;
}

Monomial Sampler::monomial(const Algebra& alg, int radius, int parity) {
  if (alg.n == 0 && parity == 1) throw DomainError("no odd monomials without odd variables");
  for (;;) {
    Monomial mono = monomial(alg, radius);
    if (mono.parity() == parity) return mono;
  }
}

Generator Sampler::generator(const Algebra& alg) {
  auto slots = alg.even_slots();
  int k = uniform(0, static_cast<int>(slots.size()) + alg.n - 1);
  if (k < static_cast<int>(slots.size())) return Generator::d(slots[static_cast<std::size_t>(k)]);
  return Generator::p(k - static_cast<int>(slots.size()) + 1);
}

VectorField Sampler::field(const Algebra& alg, int terms, int radius, int parity) {
  VectorField x(alg);
  while (x.is_zero()) {
    for (int k = 0; k < terms; ++k) {
      Generator g = generator(alg);
      int want = parity ^ g.parity();
      if (alg.n == 0 && want == 1) continue;
      x.add_term(FieldKey{monomial(alg, radius, want), g}, rational());
    }
  }
  return x;
}

VectorField Sampler::field(const Algebra& alg, int terms, int radius) {
  return field(alg, terms, radius, alg.n == 0 ? 0 : uniform(0, 1));
}

SuperPoly Sampler::poly(const Algebra& alg, int terms, int radius) {
  SuperPoly f(alg.m, alg.n);
  for (int k = 0; k < terms; ++k) f.add_term(monomial(alg, radius), rational());
  return f;
}

SuperPoly Sampler::homogeneous_poly(const Algebra& alg, int terms, int radius, int parity) {
  SuperPoly f(alg.m, alg.n);
  for (int k = 0; k < terms; ++k) f.add_term(monomial(alg, radius, parity), rational());
  return f;
}

TensorVector Sampler::tensor_vector(const TensorModuleSpec& spec, int terms, int radius) {
  TensorVector w(spec.alg.m, spec.alg.n);
  for (int k = 0; k < terms; ++k) w.add_term(TensorKey{monomial(spec.alg, radius), uniform(0, spec.V.dim - 1)}, rational());
  return w;
}

TensorVector Sampler::homogeneous_tensor_vector(const TensorModuleSpec& spec, int terms, int radius, int parity) {
  TensorVector w(spec.alg.m, spec.alg.n);
  int guard = 0;
  while (w.is_zero() || static_cast<int>(w.terms().size()) < terms) {
    if (++guard > 1000 * terms) break;
    TensorKey key{monomial(spec.alg, radius), uniform(0, spec.V.dim - 1)};
    if (wmn::parity(spec, key) == parity) w.add_term(key, rational());
  }
  if (w.is_zero()) throw DomainError("no basis vectors of the requested parity");
  return w;
}

}  // namespace wmn
