#include "wmn/cover.hpp"

#include <sstream>

#include "wmn/errors.hpp"

namespace wmn {

namespace g = grassmann;

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

// coefficient slots carrying a Laurent variable
std::vector<int> t_slots(const Algebra& alg) {
  std::vector<int> out;
  if (alg.allows_t0()) out.push_back(0);
  for (int i = 1; i <= alg.m; ++i) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> exponent_cube(const Algebra& alg, int radius) {
  std::vector<std::vector<int>> cube{std::vector<int>(sz(alg.m + 1), 0)};
  for (int slot : t_slots(alg)) {
    std::vector<std::vector<int>> next;
    for (const auto& v : cube) {
      for (int k = -radius; k <= radius; ++k) {
        auto w = v;
        w[sz(slot)] = k;
        next.push_back(std::move(w));
      }
    }
    cube = std::move(next);
  }
  return cube;
}

std::vector<Generator> all_generators(const Algebra& alg) {
  std::vector<Generator> out;
  for (int i : alg.even_slots()) out.push_back(Generator::d(i));
  for (int a = 1; a <= alg.n; ++a) out.push_back(Generator::p(a));
  return out;
}

// d_i slots of the Prop: the Laurent variables other than t_0 of the semidirect kinds
std::vector<int> shift_slots(const Algebra& alg) { return t_slots(alg); }

TensorVector act_basis(const TensorModuleSpec& spec, const FieldKey& k, const TensorVector& w) {
  return act(spec, VectorField::basis(spec.alg, k.mono, k.gen), w);
}

}  // namespace

void CoverElement::add_term(const CoverKey& k, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CoverElement& CoverElement::operator+=(const CoverElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

CoverElement& CoverElement::operator-=(const CoverElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

CoverElement& CoverElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

CoverElement psi(const VectorField& tau, const TensorVector& u) {
  CoverElement out(tau.algebra());
  for (const auto& [kt, ct] : tau.terms()) {
    for (const auto& [ku, cu] : u.terms()) out.add_term(CoverKey{kt, ku}, ct * cu);
  }
  return out;
}

TensorVector psi_eval(const TensorModuleSpec& spec, const CoverElement& c, const SuperPoly& gp) {
  TensorVector out(spec.alg.m, spec.alg.n);
  for (const auto& [mono, cg] : gp.terms()) {
    SuperPoly gm = SuperPoly::monomial(spec.alg.m, spec.alg.n, mono);
    for (const auto& [k, cc] : c.terms()) {
      VectorField gt = gm * VectorField::basis(c.algebra(), k.tau.mono, k.tau.gen);
      TensorVector v = act(spec, gt, TensorVector::basis(spec.alg.m, spec.alg.n, k.u.mono, k.u.v));
      int s = ((k.tau.parity() ^ parity(spec, k.u)) & mono.parity()) ? -1 : 1;
      out += Scalar(cg * cc * s) * v;
    }
  }
  return out;
}

CoverElement cover_act(const SuperPoly& f, const CoverElement& c) {
  CoverElement out(c.algebra());
  for (const auto& [k, cc] : c.terms()) {
    VectorField ft = f * VectorField::basis(c.algebra(), k.tau.mono, k.tau.gen);
    for (const auto& [kt, ct] : ft.terms()) out.add_term(CoverKey{kt, k.u}, cc * ct);
  }
  return out;
}

CoverElement cover_act(const TensorModuleSpec& spec, const VectorField& eta, const CoverElement& c) {
  CoverElement out(c.algebra());
  for (const auto& [ke, ce] : eta.terms()) {
    for (const auto& [k, cc] : c.terms()) {
      VectorField br = bracket(c.algebra(), ke, k.tau);
      for (const auto& [kt, ct] : br.terms()) out.add_term(CoverKey{kt, k.u}, ce * cc * ct);
      TensorVector eu = act_basis(spec, ke, TensorVector::basis(spec.alg.m, spec.alg.n, k.u.mono, k.u.v));
      int s = (ke.parity() & k.tau.parity()) ? -1 : 1;
      for (const auto& [ku, cu] : eu.terms()) out.add_term(CoverKey{k.tau, ku}, ce * cc * cu * s);
    }
  }
  return out;
}

TensorVector pi(const TensorModuleSpec& spec, const CoverElement& c) {
  return psi_eval(spec, c, SuperPoly::one(spec.alg.m, spec.alg.n));
}

std::vector<Monomial> evaluation_window(const Algebra& alg, int W) {
  std::vector<Monomial> out;
  for (const auto& t : exponent_cube(alg, W)) {
    for (int p = 0; p < (1 << alg.n); ++p) out.push_back(Monomial{t, static_cast<g::Bits>(p)});
  }
  return out;
}

bool eval_equal(const TensorModuleSpec& spec, const CoverElement& a, const CoverElement& b, int W) {
  CoverElement d = a - b;
  if (d.is_zero()) return true;
  for (const auto& mono : evaluation_window(spec.alg, W)) {
    if (!psi_eval(spec, d, SuperPoly::monomial(spec.alg.m, spec.alg.n, mono)).is_zero()) return false;
  }
  return true;
}

std::vector<TensorKey> window_basis(const TensorModuleSpec& spec, int radius) {
  std::vector<TensorKey> out;
  for (const auto& mono : evaluation_window(spec.alg, radius)) {
    for (int v = 0; v < spec.V.dim; ++v) out.push_back(TensorKey{mono, v});
  }
  return out;
}

namespace {

bool kills_window(const TensorModuleSpec& spec, const UEnv& u, const std::vector<TensorKey>& basis) {
  for (const auto& k : basis) {
    if (!act(spec, u, TensorVector::basis(spec.alg.m, spec.alg.n, k.mono, k.v)).is_zero()) return false;
  }
  return true;
}

}  // namespace

bool omega_annihilates(const TensorModuleSpec& spec, int ell, const AnnWindow& win) {
  auto basis = window_basis(spec, win.k_radius);
  for (int i : shift_slots(spec.alg)) {
    for (int p = -win.p_radius; p <= win.p_radius; ++p) {
      for (int q = -win.q_radius; q <= win.q_radius; ++q) {
        if (!kills_window(spec, omega(spec.alg, ell, p, q, i), basis)) return false;
      }
    }
  }
  return true;
}

std::optional<int> minimal_ell(const TensorModuleSpec& spec, int bound, const AnnWindow& win) {
  for (int ell = 0; ell <= bound; ++ell) {
    if (omega_annihilates(spec, ell, win)) return ell;
  }
  return std::nullopt;
}

bool ann_annihilates(const TensorModuleSpec& spec, int N, const AnnWindow& win) {
  auto basis = window_basis(spec, win.k_radius);
  auto ps = exponent_cube(spec.alg, win.p_radius);
  for (int i : shift_slots(spec.alg)) {
    for (Generator target : all_generators(spec.alg)) {
      for (const auto& p : ps) {
        for (int q = -win.q_radius; q <= win.q_radius; ++q) {
          for (int r = 0; r < (1 << spec.alg.n); ++r) {
            if (!kills_window(spec, ann_ops(spec.alg, N, p, q, static_cast<g::Bits>(r), i, target), basis)) return false;
          }
        }
      }
    }
  }
  return true;
}

int minimal_N_search(const TensorModuleSpec& spec, int bound, const AnnWindow& win) {
  for (int N = 0; N <= bound; ++N) {
    if (ann_annihilates(spec, N, win)) return N;
  }
  throw DomainError("no annihilating N up to " + std::to_string(bound));
}

CoverElement window_reduce(const TensorModuleSpec& spec, const CoverElement& c, int N) {
  const Algebra alg = c.algebra();
  const auto slots = shift_slots(alg);
  const int half = N / 2;
  CoverElement out(alg);
  std::vector<std::pair<CoverKey, Scalar>> work(c.terms().begin(), c.terms().end());
  while (!work.empty()) {
    auto [k, cc] = std::move(work.back());
    work.pop_back();
    int slot = -1;
    for (int i : slots) {
      if (std::abs(k.u.mono.t[sz(i)]) > half) {
        slot = i;
        break;
      }
    }
    if (slot < 0) {
      out.add_term(k, cc);
      continue;
    }
    const int s_i = k.u.mono.t[sz(slot)];
    const int dir = s_i > 0 ? 1 : -1;
    // v with d_i v = u
    TensorVector u = TensorVector::basis(alg.m, alg.n, k.u.mono, k.u.v);
    TensorVector du = act(spec, VectorField::basis(alg, Monomial::one(alg.m), Generator::d(slot)), u);
    Scalar eig = 0;
    if (!du.is_zero()) {
      auto it = du.terms().find(k.u);
      if (it == du.terms().end() || du.terms().size() != 1) throw DomainError("module vector is not a d_i eigenvector");
      eig = it->second;
    }
    if (eig == 0) {
      std::ostringstream os;
      os << "zero weight for d_" << slot << " at s_" << slot << " = " << s_i;
      throw DomainError(os.str());
    }
    TensorVector v = Scalar(1 / eig) * u;
    for (int a = 1; a <= N; ++a) {
      Monomial shift_u = Monomial::one(alg.m);
      shift_u.t[sz(slot)] = -dir * a;
      TensorVector va = act(spec, VectorField::basis(alg, shift_u, Generator::d(slot)), v);
      FieldKey tau = k.tau;
      tau.mono.t[sz(slot)] += dir * a;
      Scalar coef = -binomial(N, a) * (a % 2 ? -1 : 1) * cc;
      for (const auto& [ku, cu] : va.terms()) work.emplace_back(CoverKey{tau, ku}, coef * cu);
    }
  }
  return out;
}

int cover_spread(const CoverElement& c) {
  int spread = 0;
  for (const auto& [k, cc] : c.terms()) {
    for (int i : t_slots(c.algebra())) spread = std::max(spread, std::abs(k.u.mono.t[sz(i)]));
  }
  return spread;
}

long cover_span_bound(const TensorModuleSpec& spec, int N) {
  long gens = static_cast<long>(all_generators(spec.alg).size());
  long window = 1;
  for (std::size_t i = 0; i < t_slots(spec.alg).size(); ++i) window *= 2 * (N / 2) + 1;
  long fiber = (1L << spec.alg.n) * spec.V.dim;
  return gens * (1L << spec.alg.n) * window * fiber;
}

long cover_weight_count(const CoverElement& c) {
  std::map<std::vector<int>, long> counts;
  long best = 0;
  for (const auto& [k, cc] : c.terms()) best = std::max(best, ++counts[add_exps(k.tau.mono.t, k.u.mono.t)]);
  return best;
}

std::string to_string(const CoverElement& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, cc] : c.terms()) {
    if (!first) os << " + ";
    first = false;
    os << cc.get_str() << "*psi(" << to_string(k.tau) << ", " << to_string(k.u.mono) << "(x)v" << k.u.v << ")";
  }
  return os.str();
}

}  // namespace wmn
