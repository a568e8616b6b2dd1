#include "wmn/jet_checks.hpp"

#include <functional>

#include "wmn/errors.hpp"
#include "wmn/polyfit.hpp"

namespace wmn {

namespace g = grassmann;

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

void record(RelationReport& rep, bool ok, const std::function<std::string()>& describe) {
  ++rep.checked;
  if (ok) return;
  if (rep.failed++ == 0) rep.first_failure = describe();
}

struct GenType {
  GenTag tag;
  int index;
};

std::vector<GenType> gen_types(int m, int n, bool has_d0) {
  std::vector<GenType> out;
  for (int i = 1; i <= m; ++i) out.push_back({GenTag::D, i});
  for (int a = 1; a <= n; ++a) out.push_back({GenTag::P, a});
  if (has_d0) out.push_back({GenTag::D0, 0});
  return out;
}

GenKey smash_gen(GenType t, g::Bits f, std::vector<int> r) { return GenKey{t.tag, t.index, f, std::move(r)}; }

// jet of degree k (m entries) for generator type t
GenKey jet_gen(int m, GenType t, g::Bits f, const std::vector<int>& k) {
  std::vector<int> l{0};
  l.insert(l.end(), k.begin(), k.end());
  if (t.tag == GenTag::D) l[sz(t.index)] -= 1;
  (void)m;
  return GenKey{t.tag, t.index, f, std::move(l)};
}

// E_K: Z(h, u) -> sum_{|k| <= K} u^k / k! z_k(h), prefixes carried along.
JetElement truncated_expansion(int m, int n, const SmashElement& x, int K) {
  JetElement out(m, n);
  auto pts = simplex_points(m, K);
  for (const auto& [key, c] : x.terms()) {
    GenType t{key.gen.tag, key.gen.index};
    for (const auto& k : pts) {
      Scalar w = c;
      for (int i = 0; i < m && w != 0; ++i) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), mpz_class(key.gen.r[sz(i + 1)]).get_mpz_t(), static_cast<unsigned long>(k[sz(i)]));
        w *= Scalar(p) / factorial(k[sz(i)]);
      }
      if (w == 0) continue;
      out.add_term(PrefKey{key.prefix, jet_gen(m, t, key.gen.f, k)}, w);
    }
  }
  return out;
}

}  // namespace

RelationReport jets_vs_smash(int m, int n, bool has_d0, int truncation, bool prefixes) {
  RelationReport rep;
  const auto types = gen_types(m, n, has_d0);
  const int nmono = 1 << n;
  const int npref = prefixes ? nmono : 1;
  const JetElement zero(m, n);
  for (GenType tx : types) {
    for (GenType ty : types) {
      for (int f = 0; f < nmono; ++f) {
        for (int gg = 0; gg < nmono; ++gg) {
          for (int px = 0; px < npref; ++px) {
            for (int py = 0; py < npref; ++py) {
              auto family = [&](const std::vector<int>& rs) {
                std::vector<int> r{0}, s{0};
                r.insert(r.end(), rs.begin(), rs.begin() + m);
                s.insert(s.end(), rs.begin() + m, rs.end());
                auto x = SmashElement::gen(m, n, smash_gen(tx, static_cast<g::Bits>(f), r), 1, static_cast<g::Bits>(px));
                auto y = SmashElement::gen(m, n, smash_gen(ty, static_cast<g::Bits>(gg), s), 1, static_cast<g::Bits>(py));
                return truncated_expansion(m, n, smash_bracket(x, y), truncation);
              };
              auto coeffs = fit_divided_powers(family, 2 * m, truncation + 1, zero);
              for (const auto& [pq, c] : coeffs) {
                int deg = 0;
                for (int v : pq) deg += v;
                if (deg > truncation) continue;
                std::vector<int> p(pq.begin(), pq.begin() + m), q(pq.begin() + m, pq.end());
                GenKey jx = jet_gen(m, tx, static_cast<g::Bits>(f), p);
                GenKey jy = jet_gen(m, ty, static_cast<g::Bits>(gg), q);
                auto x = JetElement::gen(m, n, jx, 1, static_cast<g::Bits>(px));
                auto y = JetElement::gen(m, n, jy, 1, static_cast<g::Bits>(py));
                JetElement expect = jet_bracket(x, y);
                record(rep, expect == c, [&] {
                  return "[" + to_string(x) + ", " + to_string(y) + "]: jets give " + to_string(expect) + ", smash gives " +
                         to_string(c);
                });
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

RelationReport j_annihilation_check(const JetRep& jr, int degree) {
  RelationReport rep;
  for (const auto& k : jet_generators(jr.m, jr.n, jr.has_d0, degree)) {
    auto x = JetElement::gen(jr.m, jr.n, k);
    Matrix direct = jr.op(k);
    Matrix normal = jet_op(jr, jet_nf(x));
    record(rep, direct == normal, [&] { return "J-element " + to_string(k, true) + " acts nontrivially"; });
  }
  return rep;
}

RelationReport gl_embed_check(int m, int n) {
  RelationReport rep;
  const int N = m + n;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      for (int c = 0; c < N; ++c) {
        for (int d = 0; d < N; ++d) {
          auto x = GlElement::unit(m, n, a, b);
          auto y = GlElement::unit(m, n, c, d);
          JetElement lhs = jet_nf(jet_bracket(gl_embed(x), gl_embed(y)));
          JetElement rhs = jet_nf(gl_embed(gl_bracket(x, y)));
          record(rep, lhs == rhs, [&] {
            return "e" + std::to_string(a) + std::to_string(b) + ", e" + std::to_string(c) + std::to_string(d) + ": " +
                   to_string(lhs) + " vs " + to_string(rhs);
          });
        }
      }
    }
  }
  return rep;
}

RelationReport subalgebra_check(int m, int n, bool has_d0) {
  RelationReport rep;
  std::vector<std::vector<JetElement>> groups(3);
  for (int i = 1; i <= m; ++i) groups[0].push_back(JetElement::gen(m, n, jet_d(i, 0, sub_exps(eps(m, 0), eps(m, i)))));
  if (has_d0) groups[0].push_back(JetElement::gen(m, n, jet_d0(0, eps(m, 0))));
  for (int a = 1; a <= n; ++a) groups[1].push_back(JetElement::gen(m, n, jet_p(a, 0, eps(m, 0))));
  for (int a = 0; a < m + n; ++a) {
    for (int b = 0; b < m + n; ++b) groups[2].push_back(gl_embed_unit(m, n, a, b));
  }
  for (std::size_t u = 0; u < groups.size(); ++u) {
    for (std::size_t v = u + 1; v < groups.size(); ++v) {
      for (const auto& x : groups[u]) {
        for (const auto& y : groups[v]) {
          JetElement br = jet_nf(jet_bracket(x, y));
          record(rep, br.is_zero(), [&] { return "[" + to_string(x) + ", " + to_string(y) + "] = " + to_string(br); });
        }
      }
    }
  }
  return rep;
}

InducedVector induce_from_fiber(const JetRep& jr, const VectorField& x, const InducedVector& w) {
  if (x.algebra().kind == Kind::Wm1n) throw ContextMismatch("induction needs an algebra without t_0");
  if (x.algebra().m != jr.m || x.algebra().n != jr.n) throw ContextMismatch("field and fiber contexts differ");
  if (x.algebra().has_d0() && !jr.has_d0) throw ContextMismatch("fiber carries no d_0 data");
  InducedVector out;
  for (const auto& [key, c] : x.terms()) {
    const auto& s = key.mono.t;
    GenTag tag = key.gen.type == Generator::Type::P ? GenTag::P : (key.gen.index == 0 ? GenTag::D0 : GenTag::D);
    Matrix D = expand_eval(jr, tag, key.gen.index, key.mono.xi, s);
    if (tag == GenTag::D) {
      Matrix L = lambda_op(jr.dim, jr.xi, key.mono.xi);
      for (const auto& [rk, cu] : w) {
        const auto& r = rk.first;
        auto rs = add_exps(r, s);
        for (int row = 0; row < jr.dim; ++row) {
          Scalar v = Scalar(r[sz(key.gen.index)]) * L(sz(row), sz(rk.second)) + D(sz(row), sz(rk.second));
          if (v != 0) out[{rs, row}] += c * cu * v;
        }
      }
    } else {
      for (const auto& [rk, cu] : w) {
        auto rs = add_exps(rk.first, s);
        for (int row = 0; row < jr.dim; ++row) {
          const Scalar& v = D(sz(row), sz(rk.second));
          if (v != 0) out[{rs, row}] += c * cu * v;
        }
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

InducedVector to_induced(const TensorVector& w, int dimV) {
  InducedVector out;
  for (const auto& [k, c] : w.terms()) out[{k.mono.t, static_cast<int>(k.mono.xi) * dimV + k.v}] += c;
  return out;
}

TensorVector from_induced(int m, int n, int dimV, const InducedVector& w) {
  TensorVector out(m, n);
  for (const auto& [k, c] : w) {
    out.add_term(TensorKey{Monomial{k.first, static_cast<g::Bits>(k.second / dimV)}, k.second % dimV}, c);
  }
  return out;
}

}  // namespace wmn
