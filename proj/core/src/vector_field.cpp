#include "wmn/vector_field.hpp"

#include <sstream>

#include "wmn/errors.hpp"

namespace wmn {

std::vector<int> Algebra::even_slots() const {
  std::vector<int> slots;
  for (int i = has_d0() ? 0 : 1; i <= m; ++i) slots.push_back(i);
  return slots;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Wmn: return "wmn";
    case Kind::WmnSemidirectD0: return "wmn-d0";
    case Kind::Wm1n: return "wm1n";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  if (s == "wmn") return Kind::Wmn;
  if (s == "wmn-d0" || s == "semidirect") return Kind::WmnSemidirectD0;
  if (s == "wm1n") return Kind::Wm1n;
  throw std::invalid_argument("unknown algebra kind '" + s + "' (expected wmn, wmn-d0 or wm1n)");
}

std::string to_string(const Generator& g) {
  return (g.type == Generator::Type::D ? "D" : "P") + std::to_string(g.index);
}

VectorField VectorField::basis(Algebra alg, const Monomial& mono, Generator gen, const Scalar& c) {
  VectorField x(alg);
  x.add_term(FieldKey{mono, gen}, c);
  return x;
}

VectorField VectorField::from_poly(Algebra alg, const SuperPoly& f, Generator gen) {
  if (f.m() != alg.m || f.n() != alg.n) throw ContextMismatch("coefficient polynomial context differs from algebra");
  VectorField x(alg);
  for (const auto& [mono, c] : f.terms()) x.add_term(FieldKey{mono, gen}, c);
  return x;
}

std::optional<int> VectorField::parity() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.parity();
  for (const auto& [key, c] : terms_) {
    if (key.parity() != p) return std::nullopt;
  }
  return p;
}

void VectorField::validate(const FieldKey& key) const {
  if (static_cast<int>(key.mono.t.size()) != alg_.m + 1) throw ContextMismatch("field monomial has wrong number of t-slots");
  if ((key.mono.xi & ~grassmann::full_mask(alg_.n)) != 0) throw ContextMismatch("field uses an odd variable beyond n");
  if (!alg_.allows_t0() && key.mono.t[0] != 0) throw ContextMismatch("t0 is not allowed in " + to_string(alg_.kind));
  if (key.gen.type == Generator::Type::D) {
    int lo = alg_.has_d0() ? 0 : 1;
    if (key.gen.index < lo || key.gen.index > alg_.m) throw IndexOutOfRange("d-index " + std::to_string(key.gen.index) + " out of range");
  } else if (key.gen.index < 1 || key.gen.index > alg_.n) {
    throw IndexOutOfRange("odd index " + std::to_string(key.gen.index) + " out of range");
  }
}

void VectorField::add_term(const FieldKey& key, const Scalar& c) {
  if (c == 0) return;
  validate(key);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (!(o.alg_ == alg_)) throw ContextMismatch("adding fields from different algebras");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (!(o.alg_ == alg_)) throw ContextMismatch("subtracting fields from different algebras");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

VectorField& VectorField::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

VectorField operator*(const SuperPoly& f, const VectorField& x) {
  const Algebra& alg = x.algebra();
  if (f.m() != alg.m || f.n() != alg.n) throw ContextMismatch("coefficient polynomial context differs from algebra");
  VectorField out(alg);
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [key, cx] : x.terms()) {
      int sign = 0;
      Monomial prod = mono_mul(mf, key.mono, sign);
      if (sign == 0) continue;
      out.add_term(FieldKey{prod, key.gen}, sign * cf * cx);
    }
  }
  return out;
}

SuperPoly apply_generator(Generator g, const SuperPoly& f) {
  return g.type == Generator::Type::D ? even_deriv(g.index, f) : left_deriv(g.index, f);
}

SuperPoly apply(const VectorField& x, const SuperPoly& f) {
  const Algebra& alg = x.algebra();
  if (f.m() != alg.m || f.n() != alg.n) throw ContextMismatch("field and polynomial contexts differ");
  SuperPoly out(alg.m, alg.n);
  for (const auto& [key, c] : x.terms()) {
    SuperPoly g = apply_generator(key.gen, f);
    if (g.is_zero()) continue;
    out += c * (SuperPoly::monomial(alg.m, alg.n, key.mono) * g);
  }
  return out;
}

namespace {

// coefficient-level action of a basis generator on a monomial: gen(t^r xi^p) = c * t^r xi^p'
// returns false when the result vanishes.
bool generator_on_monomial(Generator g, const Monomial& mono, Scalar& c, Monomial& out) {
  if (g.type == Generator::Type::D) {
    int e = mono.t[g.index];
    if (e == 0) return false;
    c = e;
    out = mono;
    return true;
  }
  int s = grassmann::left_deriv_sign(mono.xi, g.index);
  if (s == 0) return false;
  c = s;
  out = Monomial{mono.t, mono.xi & ~grassmann::bit(g.index)};
  return true;
}

}  // namespace

VectorField bracket(const Algebra& alg, const FieldKey& a, const FieldKey& b) {
  VectorField out(alg);
  // f a(g) b
  {
    Scalar c;
    Monomial dg;
    if (generator_on_monomial(a.gen, b.mono, c, dg)) {
      int sign = 0;
      Monomial prod = mono_mul(a.mono, dg, sign);
      if (sign != 0) out.add_term(FieldKey{prod, b.gen}, sign * c);
    }
  }
  // - (-1)^{|fa||gb|} g b(f) a
  {
    Scalar c;
    Monomial df;
    if (generator_on_monomial(b.gen, a.mono, c, df)) {
      int sign = 0;
      Monomial prod = mono_mul(b.mono, df, sign);
      if (sign != 0) {
        int koszul = sign_pow(a.parity() * b.parity());
        out.add_term(FieldKey{prod, a.gen}, -koszul * sign * c);
      }
    }
  }
  return out;
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  if (!(x.algebra() == y.algebra())) throw ContextMismatch("bracket of fields from different algebras");
  VectorField out(x.algebra());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      VectorField b = bracket(x.algebra(), kx, ky);
      if (!b.is_zero()) out += Scalar(cx * cy) * b;
    }
  }
  return out;
}

std::optional<std::vector<int>> h_weight(const VectorField& x) {
  auto slots = x.algebra().even_slots();
  std::optional<std::vector<int>> w;
  if (x.is_zero()) return std::vector<int>(slots.size(), 0);
  for (const auto& [key, c] : x.terms()) {
    std::vector<int> cur;
    for (int s : slots) cur.push_back(key.mono.t[s]);
    if (!w) {
      w = cur;
    } else if (*w != cur) {
      return std::nullopt;
    }
  }
  return w;
}

std::string to_string(const FieldKey& key) {
  std::string mono = to_string(key.mono);
  return (mono == "1" ? std::string() : mono + "*") + to_string(key.gen);
}

std::string to_string(const VectorField& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : x.terms()) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << to_string(mag) << '*';
    os << to_string(key);
  }
  return os.str();
}

}  // namespace wmn
