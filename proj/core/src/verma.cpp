#include "wmn/verma.hpp"

#include <functional>
#include <sstream>

#include "wmn/errors.hpp"
#include "wmn/matrix.hpp"

namespace wmn {

namespace g = grassmann;

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

void add_to(VermaVector& out, const VermaKey& k, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = out.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

Algebra zero_part(const HwSpec& hw) { return Algebra{Kind::WmnSemidirectD0, hw.m, hw.n}; }

std::vector<std::vector<int>> side_cube(int m, int radius) {
  std::vector<std::vector<int>> cube{std::vector<int>(sz(m + 1), 0)};
  for (int i = 1; i <= m; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& v : cube) {
      for (int k = -radius; k <= radius; ++k) {
        auto w = v;
        w[sz(i)] = k;
        next.push_back(std::move(w));
      }
    }
    cube = std::move(next);
  }
  return cube;
}

std::vector<Generator> generators(const Algebra& alg) {
  std::vector<Generator> out;
  for (int i : alg.even_slots()) out.push_back(Generator::d(i));
  for (int a = 1; a <= alg.n; ++a) out.push_back(Generator::p(a));
  return out;
}

std::vector<FieldKey> letters_of_degree(const HwSpec& hw, int deg) {
  std::vector<FieldKey> out;
  Algebra alg = hw.big();
  for (const auto& t : side_cube(hw.m, hw.exact() ? 0 : hw.window)) {
    for (int p = 0; p < (1 << hw.n); ++p) {
      for (Generator gen : generators(alg)) {
        Monomial mono{t, static_cast<g::Bits>(p)};
        mono.t[0] = deg;
        out.push_back(FieldKey{mono, gen});
      }
    }
  }
  return out;
}

// left multiplication of words by a V_- letter, then straightening
VermaVector lower(const HwSpec& hw, const FieldKey& x, const Scalar& c, const VermaVector& v) {
  VermaVector out;
  for (const auto& [k, cv] : v) {
    Word w{x};
    w.insert(w.end(), k.first.begin(), k.first.end());
    UEnv u = pbw_normalize(UEnv::word(hw.big(), w, c * cv));
    for (const auto& [nw, cn] : u.terms()) add_to(out, VermaKey{nw, k.second}, cn);
  }
  return out;
}

VermaVector act_key(const HwSpec& hw, const FieldKey& x, const Word& word, std::size_t from, const TensorKey& t);

VermaVector act_field(const HwSpec& hw, const VectorField& x, const Word& word, std::size_t from, const TensorKey& t) {
  VermaVector out;
  for (const auto& [k, c] : x.terms()) {
    for (const auto& [kk, cc] : act_key(hw, k, word, from, t)) add_to(out, kk, c * cc);
  }
  return out;
}

// x acting on (word[from..] ⊗ t)
VermaVector act_key(const HwSpec& hw, const FieldKey& x, const Word& word, std::size_t from, const TensorKey& t) {
  const int deg = d0_degree(x);
  Word rest(word.begin() + static_cast<long>(from), word.end());
  if (deg < 0) return lower(hw, x, 1, VermaVector{{VermaKey{rest, t}, 1}});
  if (rest.empty()) {
    VermaVector out;
    if (deg > 0) return out;
    VectorField x0 = VectorField::basis(zero_part(hw), x.mono, x.gen);
    TensorVector r = act(hw.T, x0, TensorVector::basis(hw.m, hw.n, t.mono, t.v));
    for (const auto& [k, c] : r.terms()) add_to(out, VermaKey{Word{}, k}, c);
    return out;
  }
  // x y1 rest = [x, y1] rest + (-1)^{x y1} y1 x rest
  const FieldKey& y1 = word[from];
  VermaVector out = act_field(hw, bracket(hw.big(), x, y1), word, from + 1, t);
  VermaVector inner = act_key(hw, x, word, from + 1, t);
  Scalar sign = (x.parity() & y1.parity()) ? -1 : 1;
  for (const auto& [k, c] : lower(hw, y1, sign, inner)) add_to(out, k, c);
  return out;
}

}  // namespace

std::array<VectorField, 3> triangular_parts(const VectorField& x) {
  const Algebra& alg = x.algebra();
  if (alg.kind != Kind::Wm1n) throw ContextMismatch("triangular decomposition needs W(m+1, n)");
  std::array<VectorField, 3> out{VectorField(alg), VectorField(zero_part(HwSpec{alg.m, alg.n, {}, 0})), VectorField(alg)};
  for (const auto& [k, c] : x.terms()) {
    int deg = d0_degree(k);
    out[deg < 0 ? 0 : deg == 0 ? 1 : 2].add_term(k, c);
  }
  return out;
}

HwSpec make_hw_spec(GlRep V, std::vector<Scalar> lambda, int window) {
  HwSpec hw;
  hw.m = V.M;
  hw.n = V.N;
  hw.window = window;
  hw.T = make_tensor_spec(Algebra{Kind::WmnSemidirectD0, V.M, V.N}, std::move(V), std::move(lambda));
  return hw;
}

int verma_degree(const VermaKey& k) {
  int d = 0;
  for (const auto& x : k.first) d += d0_degree(x);
  return d;
}

VermaVector verma_act(const HwSpec& hw, const VectorField& x, const VermaVector& v) {
  VermaVector out;
  for (const auto& [k, c] : v) {
    for (const auto& [kk, cc] : act_field(hw, x, k.first, 0, k.second)) add_to(out, kk, c * cc);
  }
  return out;
}

std::vector<FieldKey> lowering_letters(const HwSpec& hw, int depth) {
  std::vector<FieldKey> out;
  for (int d = 1; d <= depth; ++d) {
    auto l = letters_of_degree(hw, -d);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

std::vector<FieldKey> raising_letters(const HwSpec& hw, int max_degree) {
  std::vector<FieldKey> out;
  for (int d = 1; d <= max_degree; ++d) {
    auto l = letters_of_degree(hw, d);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

std::vector<TensorKey> t_basis(const HwSpec& hw) {
  std::vector<TensorKey> out;
  for (const auto& t : side_cube(hw.m, hw.exact() ? 0 : hw.window)) {
    for (int p = 0; p < (1 << hw.n); ++p) {
      for (int v = 0; v < hw.T.V.dim; ++v) out.push_back(TensorKey{Monomial{t, static_cast<g::Bits>(p)}, v});
    }
  }
  return out;
}

std::vector<VermaKey> verma_basis(const HwSpec& hw, int d) {
  auto letters = lowering_letters(hw, d);
  std::sort(letters.begin(), letters.end(), pbw_less);
  std::vector<Word> words;
  Word cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      words.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < letters.size(); ++i) {
      int deg = -d0_degree(letters[i]);
      if (deg > left) continue;
      cur.push_back(letters[i]);
      // odd letters appear at most once
      rec(letters[i].parity() ? i + 1 : i, left - deg);
      cur.pop_back();
    }
  };
  rec(0, d);
  std::vector<VermaKey> out;
  for (const auto& w : words) {
    for (const auto& t : t_basis(hw)) out.emplace_back(w, t);
  }
  return out;
}

RadicalReport radical_at(const HwSpec& hw, int depth, int raise_depth) {
  if (raise_depth < depth) throw DomainError("raise-depth must be at least the depth");
  RadicalReport rep;
  rep.depth = depth;
  rep.raise_depth = raise_depth;
  rep.windowed = !hw.exact();
  rep.radical_by_E.assign(sz(raise_depth), std::vector<long>(sz(depth + 1), 0));
  const auto raise = raising_letters(hw);
  for (int d = 0; d <= depth; ++d) {
    auto basis = verma_basis(hw, d);
    const long dim = static_cast<long>(basis.size());
    rep.m_dims.push_back(dim);
    if (d == 0) {
      rep.radical_dims.push_back(0);
      rep.quotient_dims.push_back(dim);
      continue;
    }
    RowSpace rows(basis.size());
    // images[j]: current word applied to basis vector j, grouped by the word's remaining degree
    struct Partial {
      int degree;
      std::vector<VermaVector> images;
    };
    std::vector<Partial> frontier{{-d, {}}};
    for (const auto& b : basis) frontier[0].images.push_back(VermaVector{{b, 1}});
    for (int len = 1; len <= raise_depth; ++len) {
      std::vector<Partial> next;
      for (const auto& part : frontier) {
        for (const auto& x : raise) {
          int nd = part.degree + d0_degree(x);
          if (nd > 0) continue;
          VectorField xf = VectorField::basis(hw.big(), x.mono, x.gen);
          Partial np{nd, {}};
          bool any = false;
          for (const auto& img : part.images) {
            np.images.push_back(verma_act(hw, xf, img));
            any = any || !np.images.back().empty();
          }
          if (!any) continue;
          if (nd == 0) {
            std::map<TensorKey, std::vector<Scalar>> cond;
            for (std::size_t j = 0; j < np.images.size(); ++j) {
              for (const auto& [k, c] : np.images[j]) {
                auto& row = cond[k.second];
                if (row.empty()) row.assign(basis.size(), Scalar(0));
                row[j] += c;
              }
            }
            for (auto& [k, row] : cond) rows.insert(std::move(row));
          } else {
            next.push_back(std::move(np));
          }
        }
      }
      frontier = std::move(next);
      rep.radical_by_E[sz(len - 1)][sz(d)] = dim - static_cast<long>(rows.rank());
    }
    long rad = dim - static_cast<long>(rows.rank());
    rep.radical_dims.push_back(rad);
    rep.quotient_dims.push_back(dim - rad);
  }
  rep.stable_from = raise_depth;
  for (int e = raise_depth - 1; e >= 1; --e) {
    if (rep.radical_by_E[sz(e - 1)] != rep.radical_by_E[sz(raise_depth - 1)]) break;
    rep.stable_from = e;
  }
  return rep;
}

std::vector<long> lt_dims(const HwSpec& hw, int depth, int raise_depth) {
  return radical_at(hw, depth, std::max(depth, raise_depth)).quotient_dims;
}

std::string to_string(const VermaVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*" << to_string(k.first) << "(x)" << to_string(k.second.mono) << "v" << k.second.v;
  }
  return os.str();
}

}  // namespace wmn
