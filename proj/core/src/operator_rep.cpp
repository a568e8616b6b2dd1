#include "wmn/operator_rep.hpp"

#include <sstream>

#include "wmn/errors.hpp"
#include "wmn/polyfit.hpp"
#include "wmn/vector_field.hpp"

namespace wmn {

namespace g = grassmann;

Matrix supercommutator(const Matrix& a, int pa, const Matrix& b, int pb) {
  Matrix out = a * b;
  Matrix back = b * a;
  if (pa & pb) {
    out += back;
  } else {
    out -= back;
  }
  return out;
}

Matrix lambda_op(int dim, const std::vector<Matrix>& xi, g::Bits p) {
  Matrix out = Matrix::identity(static_cast<std::size_t>(dim));
  // xi^p = xi_a1 xi_a2 ... in increasing order
  for (int a = g::kMaxOdd; a >= 1; --a) {
    if (g::contains(p, a)) out = xi[static_cast<std::size_t>(a - 1)] * out;
  }
  return out;
}

Matrix smash_op(const FiberModule& u, const SmashElement& x) {
  Matrix out(static_cast<std::size_t>(u.dim), static_cast<std::size_t>(u.dim));
  for (const auto& [k, c] : x.terms()) out += c * (lambda_op(u.dim, u.xi, k.prefix) * u.smash(k.gen));
  return out;
}

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

// Operators on Λ (2^n x 2^n): multiplication by +-xi^f, and d/dxi_b.
Matrix lambda_mult(int n, const SignedMono& f) {
  const int d = 1 << n;
  Matrix out(sz(d), sz(d));
  if (f.c == 0) return out;
  for (int p = 0; p < d; ++p) {
    SignedMono q = mono_product(f.bits, static_cast<g::Bits>(p));
    if (q.c != 0) out(q.bits, sz(p)) = f.c * q.c;
  }
  return out;
}

Matrix lambda_deriv(int n, int b) {
  const int d = 1 << n;
  Matrix out(sz(d), sz(d));
  for (int p = 0; p < d; ++p) {
    SignedMono q = left_deriv_mono(b, static_cast<g::Bits>(p));
    if (q.c != 0) out(q.bits, sz(p)) = q.c;
  }
  return out;
}

// a ⊗ B on Λ ⊗ V with (a ⊗ B)(g ⊗ v) = (-1)^{|B||g|} a g ⊗ B v.
Matrix graded_kron(const Matrix& a, const Matrix& B, int bpar) {
  const std::size_t dv = B.rows();
  Matrix out(a.rows() * dv, a.cols() * dv);
  for (std::size_t p2 = 0; p2 < a.rows(); ++p2) {
    for (std::size_t p = 0; p < a.cols(); ++p) {
      if (a(p2, p) == 0) continue;
      int s = (bpar && g::parity(static_cast<g::Bits>(p))) ? -1 : 1;
      for (std::size_t j2 = 0; j2 < dv; ++j2) {
        for (std::size_t j = 0; j < dv; ++j) {
          if (B(j2, j) != 0) out(p2 * dv + j2, p * dv + j) = a(p2, p) * B(j2, j) * s;
        }
      }
    }
  }
  return out;
}

}  // namespace

FiberModule tensor_fiber(const GlRep& V, const std::vector<Scalar>& lambda, TensorFiberOptions opts) {
  const int m = V.M;
  const int n = V.N;
  if (static_cast<int>(lambda.size()) != m + 1) throw ContextMismatch("lambda must have m+1 slots");
  FiberModule u;
  u.m = m;
  u.n = n;
  u.dim = (1 << n) * V.dim;
  u.has_d0 = opts.has_d0;
  for (int p = 0; p < (1 << n); ++p) {
    for (int j = 0; j < V.dim; ++j) u.parity.push_back(g::parity(static_cast<g::Bits>(p)) ^ V.parity[sz(j)]);
  }
  Matrix idV = Matrix::identity(sz(V.dim));
  for (int a = 1; a <= n; ++a) u.xi.push_back(graded_kron(lambda_mult(n, {1, g::bit(a)}), idV, 0));

  u.smash = [V, lambda, opts, m, n, idV](const GenKey& k) {
    Matrix Lf = lambda_mult(n, {1, k.f});
    Matrix out(sz((1 << n) * V.dim), sz((1 << n) * V.dim));
    auto gl_odd = [&](int a) { return m + a - 1; };
    auto odd_rows = [&](int col) {
      for (int a = 1; a <= n; ++a) {
        SignedMono fa = right_deriv_mono(k.f, a);
        if (fa.c == 0) continue;
        int row = gl_odd(a);
        int p = V.index_parity(row) ^ V.index_parity(col);
        out += graded_kron(lambda_mult(n, fa), V.e(row, col), p);
      }
    };
    auto even_rows = [&](int col) {
      for (int i = 1; i <= m; ++i) {
        if (k.r[sz(i)] == 0) continue;
        int p = V.index_parity(i - 1) ^ V.index_parity(col);
        out += Scalar(k.r[sz(i)]) * graded_kron(Lf, V.e(i - 1, col), p);
      }
    };
    switch (k.tag) {
      case GenTag::D: {
        const int j = k.index;
        out += lambda[sz(j)] * graded_kron(Lf, idV, 0);
        even_rows(j - 1);
        odd_rows(j - 1);
        if (opts.planted_quadratic != 0) {
          out += opts.planted_quadratic * Scalar(k.r[sz(j)] * k.r[sz(j)]) * graded_kron(Lf, idV, 0);
        }
        break;
      }
      case GenTag::P: {
        const int b = k.index;
        out += graded_kron(Lf * lambda_deriv(n, b), idV, 0);
        even_rows(gl_odd(b));
        odd_rows(gl_odd(b));
        break;
      }
      case GenTag::D0:
        if (!opts.has_d0) throw ContextMismatch("D_0 is not part of this algebra");
        out += lambda[0] * graded_kron(Lf, idV, 0);
        break;
    }
    return out;
  };
  return u;
}

FiberModule adjoint_root_fiber(int m, int n, const std::vector<int>& r, const Scalar& lambda0, bool has_d0) {
  if (static_cast<int>(r.size()) != m + 1) throw ContextMismatch("root index must have m+1 slots");
  const int rank = m + n;
  FiberModule u;
  u.m = m;
  u.n = n;
  u.dim = (1 << n) * rank;
  u.has_d0 = has_d0;
  for (int p = 0; p < (1 << n); ++p) {
    for (int b = 0; b < rank; ++b) u.parity.push_back(g::parity(static_cast<g::Bits>(p)) ^ (b >= m ? 1 : 0));
  }
  auto gen_of = [m](int b) { return b < m ? Generator::d(b + 1) : Generator::p(b - m + 1); };
  auto index_of = [m](const Generator& gen) { return gen.type == Generator::Type::D ? gen.index - 1 : m + gen.index - 1; };
  Matrix idR = Matrix::identity(sz(rank));
  for (int a = 1; a <= n; ++a) u.xi.push_back(kron(lambda_mult(n, {1, g::bit(a)}), idR));

  Algebra alg{Kind::Wmn, m, n};
  u.smash = [=](const GenKey& k) {
    Matrix out(sz(u.dim), sz(u.dim));
    if (k.tag == GenTag::D0) {
      if (!has_d0) throw ContextMismatch("D_0 is not part of this algebra");
      return Scalar(lambda0) * kron(lambda_mult(n, {1, k.f}), idR);
    }
    Generator gen = k.tag == GenTag::D ? Generator::d(k.index) : Generator::p(k.index);
    VectorField x = VectorField::basis(alg, Monomial{k.r, k.f}, gen);
    for (int p = 0; p < (1 << n); ++p) {
      for (int b = 0; b < rank; ++b) {
        VectorField y = VectorField::basis(alg, Monomial{r, static_cast<g::Bits>(p)}, gen_of(b));
        VectorField br = bracket(x, y);
        for (const auto& [key, c] : br.terms()) {
          if (key.mono.t != add_exps(k.r, r)) throw std::logic_error("bracket left the root space");
          out(sz(static_cast<int>(key.mono.xi) * rank + index_of(key.gen)), sz(p * rank + b)) += c;
        }
      }
    }
    return out;
  };
  return u;
}

Matrix JetRep::op(const GenKey& k) const {
  auto it = ops.find(k);
  return it == ops.end() ? zero() : it->second;
}

Matrix jet_op(const JetRep& rep, const JetElement& x) {
  Matrix out = rep.zero();
  for (const auto& [k, c] : x.terms()) {
    auto it = rep.ops.find(k.gen);
    if (it == rep.ops.end()) continue;
    out += c * (lambda_op(rep.dim, rep.xi, k.prefix) * it->second);
  }
  return out;
}

namespace {

GenKey with_index(GenTag tag, int index, g::Bits f, std::vector<int> r) { return GenKey{tag, index, f, std::move(r)}; }

std::vector<std::pair<GenTag, int>> gen_types(int m, int n, bool has_d0) {
  std::vector<std::pair<GenTag, int>> out;
  for (int i = 1; i <= m; ++i) out.emplace_back(GenTag::D, i);
  for (int a = 1; a <= n; ++a) out.emplace_back(GenTag::P, a);
  if (has_d0) out.emplace_back(GenTag::D0, 0);
  return out;
}

std::vector<int> slots_of(const std::vector<int>& p) {
  std::vector<int> r{0};
  r.insert(r.end(), p.begin(), p.end());
  return r;
}

}  // namespace

JetRep fit_jets(const FiberModule& u, int degree) {
  JetRep rep;
  rep.m = u.m;
  rep.n = u.n;
  rep.dim = u.dim;
  rep.has_d0 = u.has_d0;
  rep.degree = degree;
  rep.parity = u.parity;
  rep.xi = u.xi;
  const Matrix zero = rep.zero();

  // extra points: one layer beyond the fitted simplex, plus negative corners
  std::vector<std::vector<int>> extra = simplex_points(u.m, degree + 1);
  std::erase_if(extra, [&](const std::vector<int>& p) {
    int s = 0;
    for (int v : p) s += v;
    return s <= degree;
  });
  if (u.m > 0) {
    extra.push_back(std::vector<int>(sz(u.m), -1));
    extra.push_back(std::vector<int>(sz(u.m), -2));
    for (int i = 0; i < u.m; ++i) {
      std::vector<int> p(sz(u.m), 0);
      p[sz(i)] = -3;
      extra.push_back(p);
      p[sz(i)] = 2;
      if (u.m > 1) p[sz((i + 1) % u.m)] = -1;
      extra.push_back(p);
    }
  }

  for (auto [tag, index] : gen_types(u.m, u.n, u.has_d0)) {
    for (int f = 0; f < (1 << u.n); ++f) {
      auto family = [&](const std::vector<int>& p) { return u.smash(with_index(tag, index, static_cast<g::Bits>(f), slots_of(p))); };
      auto coeffs = fit_divided_powers(family, u.m, degree, zero);
      for (const auto& p : extra) {
        if (!(eval_divided_powers(coeffs, p, zero) == family(p))) {
          throw DomainError("operator family is not polynomial of degree <= " + std::to_string(degree));
        }
      }
      for (auto& [k, mat] : coeffs) {
        if (mat.is_zero()) continue;
        std::vector<int> l = slots_of(k);
        if (tag == GenTag::D) l[sz(index)] -= 1;
        rep.ops.emplace(with_index(tag, index, static_cast<g::Bits>(f), std::move(l)), std::move(mat));
      }
    }
  }
  return rep;
}

Matrix expand_eval(const JetRep& rep, GenTag tag, int index, g::Bits f, const std::vector<int>& r) {
  if (static_cast<int>(r.size()) != rep.m + 1) throw ContextMismatch("index vector must have m+1 slots");
  std::map<std::vector<int>, Matrix> coeffs;
  for (const auto& [k, mat] : rep.ops) {
    if (k.tag != tag || k.index != index || k.f != f) continue;
    auto deg = jet_degree(k);
    coeffs.emplace(std::vector<int>(deg.begin() + 1, deg.end()), mat);
  }
  return eval_divided_powers(coeffs, std::vector<int>(r.begin() + 1, r.end()), rep.zero());
}

JetRep adjoint_root_jets(int m, int n, const std::vector<int>& r, const Scalar& lambda0, bool has_d0) {
  const int rank = m + n;
  JetRep rep;
  rep.m = m;
  rep.n = n;
  rep.dim = (1 << n) * rank;
  rep.has_d0 = has_d0;
  rep.degree = 1;
  for (int p = 0; p < (1 << n); ++p) {
    for (int b = 0; b < rank; ++b) rep.parity.push_back(g::parity(static_cast<g::Bits>(p)) ^ (b >= m ? 1 : 0));
  }
  Matrix idR = Matrix::identity(sz(rank));
  for (int a = 1; a <= n; ++a) rep.xi.push_back(kron(lambda_mult(n, {1, g::bit(a)}), idR));

  auto col = [&](int p, int b) { return sz(p * rank + b); };
  auto dcol = [&](int j) { return j - 1; };
  auto pcol = [&](int a) { return m + a - 1; };
  auto zero_idx = eps(m, 0);

  for (int fi = 0; fi < (1 << n); ++fi) {
    const g::Bits f = static_cast<g::Bits>(fi);
    const int fp = g::parity(f);
    for (int i = 1; i <= m; ++i) {
      // d_i(f, -e_i): g d_j -> r_i fg d_j ; g p_a -> r_i fg p_a - (-1)^{|f|+|g|} d_a(f) g d_i
      Matrix low = rep.zero();
      for (int p = 0; p < (1 << n); ++p) {
        const g::Bits gg = static_cast<g::Bits>(p);
        SignedMono fg = mono_product(f, gg);
        for (int b = 0; b < rank; ++b) {
          if (fg.c != 0) low(col(static_cast<int>(fg.bits), b), col(p, b)) += Scalar(r[sz(i)] * fg.c);
          if (b >= m) {
            int a = b - m + 1;
            SignedMono h = mono_product(left_deriv_mono(a, f), gg);
            if (h.c != 0) low(col(static_cast<int>(h.bits), dcol(i)), col(p, b)) -= Scalar(sign_pow(fp + g::parity(gg)) * h.c);
          }
        }
      }
      rep.ops.emplace(jet_d(i, f, sub_exps(zero_idx, eps(m, i))), low);
      // d_i(f, e_a - e_i): g d_j -> -delta_aj fg d_i ; g p_b -> 0
      for (int a = 1; a <= m; ++a) {
        Matrix mid = rep.zero();
        for (int p = 0; p < (1 << n); ++p) {
          SignedMono fg = mono_product(f, static_cast<g::Bits>(p));
          if (fg.c != 0) mid(col(static_cast<int>(fg.bits), dcol(i)), col(p, dcol(a))) -= Scalar(fg.c);
        }
        rep.ops.emplace(jet_d(i, f, sub_exps(eps(m, a), eps(m, i))), mid);
      }
    }
    for (int a = 1; a <= n; ++a) {
      // p_a(f, 0): g d_j -> f d_a(g) d_j ; g p_b -> f d_a(g) p_b + (-1)^{|f|} d_b(f) g p_a
      Matrix low = rep.zero();
      for (int p = 0; p < (1 << n); ++p) {
        const g::Bits gg = static_cast<g::Bits>(p);
        SignedMono h = mono_product(f, left_deriv_mono(a, gg));
        for (int b = 0; b < rank; ++b) {
          if (h.c != 0) low(col(static_cast<int>(h.bits), b), col(p, b)) += Scalar(h.c);
          if (b >= m) {
            SignedMono h2 = mono_product(left_deriv_mono(b - m + 1, f), gg);
            if (h2.c != 0) low(col(static_cast<int>(h2.bits), pcol(a)), col(p, b)) += Scalar(sign_pow(fp) * h2.c);
          }
        }
      }
      rep.ops.emplace(jet_p(a, f, zero_idx), low);
      // p_a(f, e_c): g d_j -> -delta_cj (-1)^{|g|} fg p_a ; g p_b -> 0
      for (int c = 1; c <= m; ++c) {
        Matrix mid = rep.zero();
        for (int p = 0; p < (1 << n); ++p) {
          const g::Bits gg = static_cast<g::Bits>(p);
          SignedMono fg = mono_product(f, gg);
          if (fg.c != 0) mid(col(static_cast<int>(fg.bits), pcol(a)), col(p, dcol(c))) -= Scalar(sign_pow(g::parity(gg)) * fg.c);
        }
        rep.ops.emplace(jet_p(a, f, eps(m, c)), mid);
      }
    }
    if (has_d0) {
      rep.ops.emplace(jet_d0(f, zero_idx), Scalar(lambda0) * kron(lambda_mult(n, {1, f}), idR));
    }
  }
  std::erase_if(rep.ops, [](const auto& kv) { return kv.second.is_zero(); });
  return rep;
}

std::vector<GenKey> smash_generators(int m, int n, bool has_d0, int window) {
  std::vector<std::vector<int>> cube{std::vector<int>(sz(m + 1), 0)};
  for (int i = 1; i <= m; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& v : cube) {
      for (int k = -window; k <= window; ++k) {
        auto w = v;
        w[sz(i)] = k;
        next.push_back(std::move(w));
      }
    }
    cube = std::move(next);
  }
  std::vector<GenKey> out;
  for (auto [tag, index] : gen_types(m, n, has_d0)) {
    for (int f = 0; f < (1 << n); ++f) {
      for (const auto& r : cube) out.push_back(with_index(tag, index, static_cast<g::Bits>(f), r));
    }
  }
  return out;
}

std::vector<GenKey> jet_generators(int m, int n, bool has_d0, int degree) {
  std::vector<GenKey> out;
  for (auto [tag, index] : gen_types(m, n, has_d0)) {
    for (int f = 0; f < (1 << n); ++f) {
      for (const auto& k : simplex_points(m, degree)) {
        auto l = slots_of(k);
        if (tag == GenTag::D) l[sz(index)] -= 1;
        out.push_back(with_index(tag, index, static_cast<g::Bits>(f), std::move(l)));
      }
    }
  }
  return out;
}

namespace {

void record(RelationReport& rep, bool ok, const std::function<std::string()>& describe) {
  ++rep.checked;
  if (ok) return;
  if (rep.failed++ == 0) rep.first_failure = describe();
}

}  // namespace

RelationReport check_smash_relations(const FiberModule& u, int window) {
  RelationReport rep;
  auto gens = smash_generators(u.m, u.n, u.has_d0, window);
  std::vector<Matrix> ops;
  ops.reserve(gens.size());
  for (const auto& k : gens) ops.push_back(u.smash(k));
  for (std::size_t a = 0; a < gens.size(); ++a) {
    auto x = SmashElement::gen(u.m, u.n, gens[a]);
    for (std::size_t b = 0; b < gens.size(); ++b) {
      auto y = SmashElement::gen(u.m, u.n, gens[b]);
      Matrix lhs = smash_op(u, smash_bracket(x, y));
      Matrix rhs = supercommutator(ops[a], gens[a].parity(), ops[b], gens[b].parity());
      record(rep, lhs == rhs, [&] { return "[" + to_string(gens[a], false) + ", " + to_string(gens[b], false) + "]"; });
    }
    for (int al = 1; al <= u.n; ++al) {
      // [X, xi_a] = X(xi_a): only Delta_b(h, r) acts on Λ
      Matrix lhs = supercommutator(ops[a], gens[a].parity(), u.xi[sz(al - 1)], 1);
      Matrix rhs(sz(u.dim), sz(u.dim));
      if (gens[a].tag == GenTag::P) {
        SignedMono h = mono_product(gens[a].f, left_deriv_mono(gens[a].index, g::bit(al)));
        if (h.c != 0) rhs = Scalar(h.c) * lambda_op(u.dim, u.xi, h.bits);
      }
      record(rep, lhs == rhs, [&] { return "[" + to_string(gens[a], false) + ", x" + std::to_string(al) + "]"; });
    }
  }
  return rep;
}

RelationReport check_jet_relations(const JetRep& jr, int degree) {
  RelationReport rep;
  auto gens = jet_generators(jr.m, jr.n, jr.has_d0, degree);
  std::vector<Matrix> ops;
  ops.reserve(gens.size());
  for (const auto& k : gens) ops.push_back(jr.op(k));
  for (std::size_t a = 0; a < gens.size(); ++a) {
    auto x = JetElement::gen(jr.m, jr.n, gens[a]);
    for (std::size_t b = 0; b < gens.size(); ++b) {
      auto y = JetElement::gen(jr.m, jr.n, gens[b]);
      Matrix lhs = jet_op(jr, jet_bracket(x, y));
      Matrix rhs = supercommutator(ops[a], gens[a].parity(), ops[b], gens[b].parity());
      record(rep, lhs == rhs, [&] { return "[" + to_string(gens[a], true) + ", " + to_string(gens[b], true) + "]"; });
    }
    for (int al = 1; al <= jr.n; ++al) {
      Matrix lhs = supercommutator(ops[a], gens[a].parity(), jr.xi[sz(al - 1)], 1);
      Matrix rhs = jr.zero();
      bool low = true;
      for (std::size_t s = 1; s < gens[a].r.size(); ++s) low = low && gens[a].r[s] == 0;
      if (gens[a].tag == GenTag::P && low) {
        SignedMono h = mono_product(gens[a].f, left_deriv_mono(gens[a].index, g::bit(al)));
        if (h.c != 0) rhs = Scalar(h.c) * lambda_op(jr.dim, jr.xi, h.bits);
      }
      record(rep, lhs == rhs, [&] { return "[" + to_string(gens[a], true) + ", x" + std::to_string(al) + "]"; });
    }
  }
  return rep;
}

RelationReport check_jet_degree_bound(const JetRep& jr, int bound) {
  RelationReport rep;
  for (const auto& [k, mat] : jr.ops) {
    bool ok = jet_total_degree(k) <= bound || mat.is_zero();
    record(rep, ok, [&] { return "nonzero jet " + to_string(k, true); });
  }
  return rep;
}

}  // namespace wmn
