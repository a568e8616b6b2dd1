#include "wmn/jets.hpp"

#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lie_rinehart.hpp"
#include "wmn/errors.hpp"
#include "wmn/monomial.hpp"

namespace wmn {

namespace g = grassmann;

GenKey jet_d(int i, g::Bits f, std::vector<int> l) { return GenKey{GenTag::D, i, f, std::move(l)}; }
GenKey jet_p(int alpha, g::Bits f, std::vector<int> l) { return GenKey{GenTag::P, alpha, f, std::move(l)}; }
GenKey jet_d0(g::Bits f, std::vector<int> l) { return GenKey{GenTag::D0, 0, f, std::move(l)}; }

std::vector<int> eps(int m, int i) {
  std::vector<int> e(static_cast<std::size_t>(m + 1), 0);
  if (i > 0) e[static_cast<std::size_t>(i)] = 1;
  return e;
}

std::vector<int> jet_degree(const GenKey& k) {
  std::vector<int> deg = k.r;
  if (k.tag == GenTag::D) deg[static_cast<std::size_t>(k.index)] += 1;
  return deg;
}

int jet_total_degree(const GenKey& k) {
  auto deg = jet_degree(k);
  return std::accumulate(deg.begin() + 1, deg.end(), 0);
}

bool jet_valid(const GenKey& k) {
  if (k.r.empty() || k.r[0] != 0) return false;
  auto deg = jet_degree(k);
  for (std::size_t i = 1; i < deg.size(); ++i) {
    if (deg[i] < 0) return false;
  }
  return true;
}

namespace {

bool is_minus_eps(const std::vector<int>& l, int i) {
  for (std::size_t s = 1; s < l.size(); ++s) {
    if (l[s] != (static_cast<int>(s) == i ? -1 : 0)) return false;
  }
  return true;
}

struct JetSink {
  JetElement& out;

  // c * prefix * gen(arg); an invalid index is only allowed with a zero coefficient.
  template <class Make>
  void add(const Scalar& c, const SignedMono& prefix, const SignedMono& arg, Make make) {
    if (c == 0 || prefix.c == 0 || arg.c == 0) return;
    GenKey key = make(arg.bits);
    if (!jet_valid(key)) throw std::logic_error("jet bracket produced invalid index " + to_string(key, true));
    out.add_term(PrefKey{prefix.bits, key}, c * prefix.c * arg.c);
  }
};

JetElement jet_base(int m, int n, const GenKey& x, const GenKey& y) {
  JetElement out(m, n);
  JetSink sink{out};
  const g::Bits f = x.f;
  const g::Bits gg = y.f;
  const auto& l = x.r;
  const auto& k = y.r;
  if (l.size() != k.size()) throw ContextMismatch("jet index vectors differ in length");
  const int fp = g::parity(f);
  const int gp = g::parity(gg);
  const auto lk = add_exps(l, k);
  const SignedMono one{1, 0};
  const SignedMono fg = mono_product(f, gg);

  auto swapped = [&]() {
    JetElement rev = jet_base(m, n, y, x);
    rev *= Scalar(-sign_pow(x.parity() * y.parity()));
    return rev;
  };

  switch (x.tag) {
    case GenTag::D: {
      const int i = x.index;
      const bool x_low = is_minus_eps(l, i);
      const auto k_down = sub_exps(k, eps(m, i));
      switch (y.tag) {
        case GenTag::D: {
          const int j = y.index;
          const int dij = i == j ? 1 : 0;
          sink.add(k[i] + dij, one, fg, [&](g::Bits h) { return jet_d(j, h, lk); });
          sink.add(-(l[j] + dij), one, fg, [&](g::Bits h) { return jet_d(i, h, lk); });
          if (x_low) sink.add(-(k[i] + dij), {1, f}, {1, gg}, [&](g::Bits h) { return jet_d(j, h, k_down); });
          if (is_minus_eps(k, j)) {
            sink.add((l[j] + dij) * sign_pow(fp * gp), {1, gg}, {1, f},
                     [&](g::Bits h) { return jet_d(i, h, sub_exps(l, eps(m, j))); });
          }
          return out;
        }
        case GenTag::P: {
          const int a = y.index;
          sink.add(k[i], one, fg, [&](g::Bits h) { return jet_p(a, h, lk); });
          if (x_low) sink.add(-k[i], {1, f}, {1, gg}, [&](g::Bits h) { return jet_p(a, h, k_down); });
          sink.add(-sign_pow(fp + gp), one, mono_product(left_deriv_mono(a, f), gg), [&](g::Bits h) { return jet_d(i, h, lk); });
          return out;
        }
        case GenTag::D0: {
          sink.add(k[i], one, fg, [&](g::Bits h) { return jet_d0(h, lk); });
          if (x_low) sink.add(-k[i], {1, f}, {1, gg}, [&](g::Bits h) { return jet_d0(h, k_down); });
          return out;
        }
      }
      break;
    }
    case GenTag::P: {
      const int a = x.index;
      switch (y.tag) {
        case GenTag::D: return swapped();
        case GenTag::P: {
          const int b = y.index;
          sink.add(1, one, mono_product(f, left_deriv_mono(a, gg)), [&](g::Bits h) { return jet_p(b, h, lk); });
          sink.add(-sign_pow(fp + 1), one, mono_product(left_deriv_mono(b, f), gg), [&](g::Bits h) { return jet_p(a, h, lk); });
          return out;
        }
        case GenTag::D0: {
          sink.add(1, one, mono_product(f, left_deriv_mono(a, gg)), [&](g::Bits h) { return jet_d0(h, lk); });
          return out;
        }
      }
      break;
    }
    case GenTag::D0:
      if (y.tag == GenTag::D0) return out;
      return swapped();
  }
  (void)n;
  return out;
}

SignedMono jet_anchor(const GenKey& x, g::Bits q) {
  if (x.tag != GenTag::P) return {};
  for (std::size_t s = 1; s < x.r.size(); ++s) {
    if (x.r[s] != 0) return {};
  }
  return mono_product(x.f, left_deriv_mono(x.index, q));
}

void check_jets(const JetElement& x) {
  for (const auto& [k, c] : x.terms()) {
    if (static_cast<int>(k.gen.r.size()) != x.m() + 1 || !jet_valid(k.gen)) {
      throw DomainError("invalid jet generator " + to_string(k.gen, true));
    }
  }
}

}  // namespace

JetElement jet_bracket(const JetElement& a, const JetElement& b) {
  check_jets(a);
  check_jets(b);
  const int m = a.m();
  const int n = a.n();
  return detail::prefixed_bracket(
      a, b, [m, n](const GenKey& x, const GenKey& y) { return jet_base(m, n, x, y); }, jet_anchor);
}

namespace {

// f * X(1) + sum_b (f)*d_b * (X(x_b) - x_b X(1)) for the degree-zero jets.
void expand_low(JetElement& out, g::Bits f, const Scalar& c, const std::function<GenKey(g::Bits)>& make, int n) {
  out.add_term(PrefKey{f, make(0)}, c);
  for (int b = 1; b <= n; ++b) {
    SignedMono fb = right_deriv_mono(f, b);
    if (fb.c == 0) continue;
    out.add_term(PrefKey{fb.bits, make(g::bit(b))}, c * fb.c);
    SignedMono pre = mono_product(fb, g::bit(b));
    if (pre.c != 0) out.add_term(PrefKey{pre.bits, make(0)}, -c * pre.c);
  }
}

}  // namespace

JetElement jet_nf(const JetElement& x) {
  check_jets(x);
  const int m = x.m();
  const int n = x.n();
  JetElement out(m, n);
  for (const auto& [key, c] : x.terms()) {
    const GenKey& gk = key.gen;
    const int deg = jet_total_degree(gk);
    JetElement part(m, n);
    switch (gk.tag) {
      case GenTag::D:
        if (deg == 1) {
          part.add_term(PrefKey{gk.f, jet_d(gk.index, 0, gk.r)}, 1);
        } else if (deg == 0) {
          expand_low(part, gk.f, 1, [&](g::Bits h) { return jet_d(gk.index, h, gk.r); }, n);
        }
        break;
      case GenTag::P:
        if (deg == 1) {
          part.add_term(PrefKey{gk.f, jet_p(gk.index, 0, gk.r)}, 1);
        } else if (deg == 0) {
          expand_low(part, gk.f, 1, [&](g::Bits h) { return jet_p(gk.index, h, gk.r); }, n);
        }
        break;
      case GenTag::D0:
        if (deg == 0) part.add_term(PrefKey{gk.f, jet_d0(0, gk.r)}, 1);
        break;
    }
    out += c * part.times_prefix(key.prefix);
  }
  return out;
}

bool is_normal_generator(const GenKey& k) {
  if (!jet_valid(k)) return false;
  const int deg = jet_total_degree(k);
  switch (k.tag) {
    case GenTag::D:
    case GenTag::P:
      if (deg == 1) return k.f == 0;
      return deg == 0 && std::popcount(k.f) <= 1;
    case GenTag::D0:
      return deg == 0 && k.f == 0;
  }
  return false;
}

JetElement gl_embed_unit(int m, int n, int a, int b) {
  if (a < 0 || b < 0 || a >= m + n || b >= m + n) throw IndexOutOfRange("gl index out of range");
  const bool a_odd = a >= m;
  const bool b_odd = b >= m;
  const int ia = a_odd ? a - m + 1 : a + 1;
  const int ib = b_odd ? b - m + 1 : b + 1;
  const auto zero = eps(m, 0);
  JetElement x(m, n);
  if (!a_odd && !b_odd) {
    x.add_term(PrefKey{0, jet_d(ib, 0, sub_exps(eps(m, ia), eps(m, ib)))}, 1);
  } else if (a_odd && b_odd) {
    x.add_term(PrefKey{0, jet_p(ib, g::bit(ia), zero)}, 1);
    x.add_term(PrefKey{g::bit(ia), jet_p(ib, 0, zero)}, -1);
  } else if (!a_odd && b_odd) {
    x.add_term(PrefKey{0, jet_p(ib, 0, eps(m, ia))}, 1);
  } else {
    auto low = sub_exps(zero, eps(m, ib));
    x.add_term(PrefKey{0, jet_d(ib, g::bit(ia), low)}, 1);
    x.add_term(PrefKey{g::bit(ia), jet_d(ib, 0, low)}, -1);
  }
  return x;
}

JetElement gl_embed(const GlElement& x) {
  JetElement out(x.M, x.N);
  for (int a = 0; a < x.size(); ++a) {
    for (int b = 0; b < x.size(); ++b) {
      if (x.a(a, b) != 0) out += x.a(a, b) * gl_embed_unit(x.M, x.N, a, b);
    }
  }
  return out;
}

std::string to_string(const JetElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    if (k.prefix != 0) os << "*" << xi_string(k.prefix);
    os << "*" << to_string(k.gen, true);
  }
  return os.str();
}

}  // namespace wmn
