#include "wmn/uenv.hpp"

#include <sstream>

#include "wmn/errors.hpp"

namespace wmn {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

Monomial slot_power(const Algebra& alg, int slot, int power) {
  Monomial mono = Monomial::one(alg.m);
  mono.t[sz(slot)] = power;
  return mono;
}

}  // namespace

UEnv UEnv::word(Algebra alg, Word w, const Scalar& c) {
  UEnv u(alg);
  u.add_term(w, c);
  return u;
}

void UEnv::add_term(const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UEnv& UEnv::operator+=(const UEnv& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

UEnv& UEnv::operator-=(const UEnv& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

UEnv& UEnv::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

UEnv operator*(const UEnv& a, const UEnv& b) {
  if (!(a.algebra() == b.algebra())) throw ContextMismatch("enveloping algebra elements of different algebras");
  UEnv out(a.algebra());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

UEnv letter(const VectorField& x) {
  UEnv out(x.algebra());
  for (const auto& [k, c] : x.terms()) out.add_term(Word{k}, c);
  return out;
}

int d0_degree(const FieldKey& k) { return k.mono.t.empty() ? 0 : k.mono.t[0]; }

bool pbw_less(const FieldKey& a, const FieldKey& b) {
  auto key = [](const FieldKey& k) { return std::tuple(k.parity(), d0_degree(k), k.mono.t, k.mono.xi, k.gen); };
  return key(a) < key(b);
}

bool is_pbw_ordered(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (pbw_less(w[i + 1], w[i])) return false;
    if (w[i] == w[i + 1] && w[i].parity() == 1) return false;
  }
  return true;
}

UEnv pbw_normalize(const UEnv& u) {
  const Algebra alg = u.algebra();
  UEnv out(alg);
  std::vector<std::pair<Word, Scalar>> work(u.terms().begin(), u.terms().end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    std::size_t i = 0;
    for (; i + 1 < w.size(); ++i) {
      if (pbw_less(w[i + 1], w[i]) || (w[i] == w[i + 1] && w[i].parity() == 1)) break;
    }
    if (i + 1 >= w.size()) {
      out.add_term(w, c);
      continue;
    }
    const FieldKey x = w[i];
    const FieldKey y = w[i + 1];
    auto splice = [&](const VectorField& br, const Scalar& factor) {
      for (const auto& [k, v] : br.terms()) {
        Word nw(w.begin(), w.begin() + static_cast<long>(i));
        nw.push_back(k);
        nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        work.emplace_back(std::move(nw), c * v * factor);
      }
    };
    if (x == y) {
      // odd square: x^2 = [x, x] / 2
      splice(bracket(alg, x, x), Scalar(1, 2));
      continue;
    }
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    work.emplace_back(std::move(swapped), (x.parity() & y.parity()) ? Scalar(-c) : c);
    splice(bracket(alg, x, y), 1);
  }
  return out;
}

TensorVector act(const TensorModuleSpec& spec, const UEnv& u, const TensorVector& w) {
  TensorVector out(w.m(), w.n());
  for (const auto& [word, c] : u.terms()) {
    TensorVector v = w;
    for (auto it = word.rbegin(); it != word.rend() && !v.is_zero(); ++it) {
      v = act(spec, VectorField::basis(u.algebra(), it->mono, it->gen), v);
    }
    out += c * v;
  }
  return out;
}

UEnv omega(const Algebra& alg, int ell, int p, int q, int i) {
  UEnv out(alg);
  for (int a = 0; a <= ell; ++a) {
    Scalar c = binomial(ell, a) * (a % 2 ? -1 : 1);
    out.add_term(Word{FieldKey{slot_power(alg, i, p + a), Generator::d(i)}, FieldKey{slot_power(alg, i, q - a), Generator::d(i)}}, c);
  }
  return out;
}

UEnv ann_ops(const Algebra& alg, int N, const std::vector<int>& p, int q, grassmann::Bits r, int i, Generator target) {
  if (static_cast<int>(p.size()) != alg.m + 1) throw ContextMismatch("exponent vector must have m+1 slots");
  UEnv out(alg);
  for (int a = 0; a <= N; ++a) {
    Monomial left{p, r};
    left.t[sz(i)] += a;
    FieldKey x{left, target};
    FieldKey y{slot_power(alg, i, q - a), Generator::d(i)};
    out.add_term(Word{x, y}, binomial(N, a) * (a % 2 ? -1 : 1));
  }
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& k : w) s += "(" + to_string(k) + ")";
  return s;
}

std::string to_string(const UEnv& u) {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : u.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*" << to_string(w);
  }
  return os.str();
}

}  // namespace wmn
