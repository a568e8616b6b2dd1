#include "wmn/tensor_module.hpp"

#include <deque>
#include <sstream>

#include "wmn/errors.hpp"
#include "wmn/matrix.hpp"

namespace wmn {

std::vector<int> TensorModuleSpec::gl_slots() const {
  std::vector<int> slots;
  for (int i = alg.kind == Kind::Wm1n ? 0 : 1; i <= alg.m; ++i) slots.push_back(i);
  return slots;
}

int TensorModuleSpec::gl_even(int slot) const { return alg.kind == Kind::Wm1n ? slot : slot - 1; }

void TensorModuleSpec::validate() const {
  int want = static_cast<int>(gl_slots().size());
  if (V.M != want || V.N != alg.n) {
    throw ContextMismatch("V must be a gl(" + std::to_string(want) + "," + std::to_string(alg.n) + ")-module");
  }
  if (static_cast<int>(lambda.size()) != alg.m + 1) throw ContextMismatch("lambda must have m+1 slots");
}

TensorModuleSpec make_tensor_spec(Algebra alg, GlRep V, std::vector<Scalar> lambda_by_slot) {
  TensorModuleSpec spec{alg, std::move(V), std::move(lambda_by_slot)};
  spec.validate();
  return spec;
}

TensorVector TensorVector::basis(int m, int n, const Monomial& mono, int v, const Scalar& c) {
  TensorVector w(m, n);
  w.add_term(TensorKey{mono, v}, c);
  return w;
}

void TensorVector::add_term(const TensorKey& key, const Scalar& c) {
  if (c == 0) return;
  if (static_cast<int>(key.mono.t.size()) != m_ + 1 || (key.mono.xi >> n_) != 0) {
    throw ContextMismatch("tensor vector term outside context");
  }
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  if (m_ != o.m_ || n_ != o.n_) throw ContextMismatch("tensor vector context mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  if (m_ != o.m_ || n_ != o.n_) throw ContextMismatch("tensor vector context mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TensorVector& TensorVector::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

int parity(const TensorModuleSpec& spec, const TensorKey& key) {
  return key.mono.parity() ^ spec.V.parity[static_cast<std::size_t>(key.v)];
}

std::optional<int> parity(const TensorModuleSpec& spec, const TensorVector& w) {
  std::optional<int> p;
  for (const auto& [k, c] : w.terms()) {
    int q = parity(spec, k);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

std::optional<std::vector<Scalar>> weight(const TensorModuleSpec& spec, const TensorVector& w) {
  auto slots = spec.gl_slots();
  std::optional<std::vector<Scalar>> out;
  for (const auto& [k, c] : w.terms()) {
    std::vector<Scalar> cur;
    for (int s : slots) cur.push_back(spec.lambda[static_cast<std::size_t>(s)] + k.mono.t[static_cast<std::size_t>(s)]);
    if (out && *out != cur) return std::nullopt;
    out = std::move(cur);
  }
  if (!out) {
    out.emplace();
    for (int s : slots) out->push_back(spec.lambda[static_cast<std::size_t>(s)]);
  }
  return out;
}

namespace {

// Adds c * (t^{rs} * a) ⊗ B v into out, where a is a polynomial in xi only.
void add_image(TensorVector& out, const std::vector<int>& rs, const SuperPoly& a, const Matrix* B, int v, const Scalar& c) {
  for (const auto& [mono, ac] : a.terms()) {
    Monomial target{add_exps(rs, mono.t), mono.xi};
    if (B == nullptr) {
      out.add_term(TensorKey{target, v}, c * ac);
      continue;
    }
    for (std::size_t i = 0; i < B->rows(); ++i) {
      const Scalar& b = (*B)(i, static_cast<std::size_t>(v));
      if (b != 0) out.add_term(TensorKey{target, static_cast<int>(i)}, c * ac * b);
    }
  }
}

}  // namespace

TensorVector act(const TensorModuleSpec& spec, const VectorField& x, const TensorVector& w) {
  const Algebra& alg = x.algebra();
  if (!(alg == spec.alg)) throw ContextMismatch("vector field belongs to a different algebra");
  if (w.m() != alg.m || w.n() != alg.n) throw ContextMismatch("tensor vector context mismatch");
  const int m = alg.m;
  const int n = alg.n;
  auto slots = spec.gl_slots();
  TensorVector out(m, n);

  for (const auto& [xk, xc] : x.terms()) {
    const std::vector<int>& s = xk.mono.t;
    SuperPoly f = SuperPoly::monomial(m, n, Monomial{std::vector<int>(static_cast<std::size_t>(m + 1), 0), xk.mono.xi});
    std::vector<SuperPoly> f_right;
    for (int a = 1; a <= n; ++a) f_right.push_back(right_deriv(f, a));

    for (const auto& [wk, wc] : w.terms()) {
      const std::vector<int>& r = wk.mono.t;
      std::vector<int> rs = add_exps(r, s);
      SuperPoly g = SuperPoly::monomial(m, n, Monomial{std::vector<int>(static_cast<std::size_t>(m + 1), 0), wk.mono.xi});
      const int gpar = wk.mono.parity();
      const Scalar c = xc * wc;
      // sign for an odd rho(e) moving past g
      const Scalar odd_pass = (spec.odd_sign == OddPassSign::Koszul && gpar) ? -1 : 1;
      const Scalar defect = spec.planted_defect ? -1 : 1;
      const int v = wk.v;

      if (xk.gen.type == Generator::Type::D) {
        const int j = xk.gen.index;
        if (alg.kind == Kind::WmnSemidirectD0 && j == 0) {
          add_image(out, rs, f * g, nullptr, v, c * spec.lambda[0]);
          continue;
        }
        const int jj = spec.gl_even(j);
        add_image(out, rs, f * g, nullptr, v, c * (r[static_cast<std::size_t>(j)] + spec.lambda[static_cast<std::size_t>(j)]));
        for (int i : slots) {
          if (s[static_cast<std::size_t>(i)] == 0) continue;
          add_image(out, rs, f * g, &spec.V.e(spec.gl_even(i), jj), v, c * s[static_cast<std::size_t>(i)]);
        }
        for (int a = 1; a <= n; ++a) {
          if (f_right[static_cast<std::size_t>(a - 1)].is_zero()) continue;
          add_image(out, rs, f_right[static_cast<std::size_t>(a - 1)] * g, &spec.V.e(spec.gl_odd(a), jj), v, c * odd_pass * defect);
        }
      } else {
        const int beta = xk.gen.index;
        const int bb = spec.gl_odd(beta);
        add_image(out, rs, f * left_deriv(beta, g), nullptr, v, c);
        for (int i : slots) {
          if (s[static_cast<std::size_t>(i)] == 0) continue;
          add_image(out, rs, f * g, &spec.V.e(spec.gl_even(i), bb), v, c * s[static_cast<std::size_t>(i)] * odd_pass);
        }
        for (int a = 1; a <= n; ++a) {
          if (f_right[static_cast<std::size_t>(a - 1)].is_zero()) continue;
          add_image(out, rs, f_right[static_cast<std::size_t>(a - 1)] * g, &spec.V.e(spec.gl_odd(a), bb), v, c * defect);
        }
      }
    }
  }
  return out;
}

bool module_axiom_check(const TensorModuleSpec& spec, const VectorField& x, const VectorField& y, const TensorVector& w) {
  auto px = x.parity();
  auto py = y.parity();
  if (!px || !py) throw DomainError("module axiom check needs homogeneous fields");
  TensorVector lhs = act(spec, bracket(x, y), w);
  TensorVector rhs = act(spec, x, act(spec, y, w));
  TensorVector back = act(spec, y, act(spec, x, w));
  if (*px & *py) {
    rhs += back;
  } else {
    rhs -= back;
  }
  return lhs == rhs;
}

long multiplicity(const TensorModuleSpec& spec, const std::vector<Scalar>& mu) {
  auto slots = spec.gl_slots();
  if (mu.size() != slots.size()) throw ContextMismatch("weight has wrong length");
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!is_integer(mu[k] - spec.lambda[static_cast<std::size_t>(slots[k])])) return 0;
  }
  return (1L << spec.alg.n) * spec.V.dim;
}

namespace {

// Enumerates all integer vectors with entries in [-b, b] on the given slots.
std::vector<std::vector<int>> cube(int m, const std::vector<int>& slots, int b) {
  std::vector<std::vector<int>> out{std::vector<int>(static_cast<std::size_t>(m + 1), 0)};
  for (int s : slots) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out) {
      for (int k = -b; k <= b; ++k) {
        auto u = v;
        u[static_cast<std::size_t>(s)] = k;
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

WindowReport window_submodule_search(const TensorModuleSpec& spec, int radius, const std::vector<TensorVector>& seeds) {
  if (radius < 1) throw DomainError("window radius must be >= 1");
  spec.validate();
  const int m = spec.alg.m;
  const int n = spec.alg.n;
  const int dimV = spec.V.dim;
  const int fiber = (1 << n) * dimV;
  const int bound = 3 * radius;
  auto slots = spec.gl_slots();

  std::vector<VectorField> fields;
  std::vector<Generator> gens;
  for (int i : spec.alg.even_slots()) gens.push_back(Generator::d(i));
  for (int a = 1; a <= n; ++a) gens.push_back(Generator::p(a));
  for (const auto& s : cube(m, slots, radius)) {
    for (grassmann::Bits q = 0; q < (grassmann::Bits{1} << n); ++q) {
      for (auto g : gens) fields.push_back(VectorField::basis(spec.alg, Monomial{s, q}, g));
    }
  }

  auto in_window = [&](const std::vector<int>& t) {
    for (int s : slots) {
      if (t[static_cast<std::size_t>(s)] > bound || t[static_cast<std::size_t>(s)] < -bound) return false;
    }
    return true;
  };

  std::map<std::vector<int>, RowSpace> spaces;
  std::deque<std::pair<std::vector<int>, Vec>> queue;

  // Splits w into weight components inside the window and inserts them.
  auto absorb = [&](const TensorVector& w) {
    std::map<std::vector<int>, Vec> parts;
    for (const auto& [k, c] : w.terms()) {
      if (!in_window(k.mono.t)) continue;
      auto& vec = parts[k.mono.t];
      if (vec.empty()) vec.assign(static_cast<std::size_t>(fiber), Scalar(0));
      vec[static_cast<std::size_t>(k.mono.xi) * static_cast<std::size_t>(dimV) + static_cast<std::size_t>(k.v)] = c;
    }
    for (auto& [t, vec] : parts) {
      auto it = spaces.try_emplace(t, static_cast<std::size_t>(fiber)).first;
      if (it->second.insert(vec)) queue.emplace_back(t, std::move(vec));
    }
  };

  for (const auto& seed : seeds) absorb(seed);
  while (!queue.empty()) {
    auto [t, vec] = std::move(queue.front());
    queue.pop_front();
    TensorVector w(m, n);
    for (int idx = 0; idx < fiber; ++idx) {
      if (vec[static_cast<std::size_t>(idx)] == 0) continue;
      w.add_term(TensorKey{Monomial{t, static_cast<grassmann::Bits>(idx / dimV)}, idx % dimV}, vec[static_cast<std::size_t>(idx)]);
    }
    for (const auto& x : fields) absorb(act(spec, x, w));
  }

  WindowReport rep;
  rep.radius = radius;
  rep.full_dim_per_weight = fiber;
  for (const auto& t : cube(m, slots, bound)) {
    std::vector<int> key;
    for (int s : slots) key.push_back(t[static_cast<std::size_t>(s)]);
    auto it = spaces.find(t);
    int d = it == spaces.end() ? 0 : static_cast<int>(it->second.rank());
    rep.dims[key] = d;
    rep.total += d;
  }
  rep.proper = rep.total > 0 && rep.total < fiber * static_cast<int>(rep.dims.size());
  return rep;
}

std::string to_string(const TensorVector& w) {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : w.terms()) {
    Scalar a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1) os << to_string(a) << "*";
    os << to_string(k.mono) << "⊗v" << k.v;
  }
  return os.str();
}

}  // namespace wmn
