#include "wmn/smash.hpp"

#include <sstream>

#include "lie_rinehart.hpp"
#include "wmn/errors.hpp"
#include "wmn/monomial.hpp"

namespace wmn {

namespace g = grassmann;

void throw_context_mismatch(const char* what) { throw ContextMismatch(what); }

SignedMono mono_product(g::Bits a, g::Bits b) {
  int s = g::product_sign(a, b);
  return {s, s == 0 ? 0 : (a | b)};
}

SignedMono mono_product(const SignedMono& a, g::Bits b) {
  if (a.c == 0) return {};
  SignedMono p = mono_product(a.bits, b);
  p.c *= a.c;
  return p;
}

SignedMono mono_product(g::Bits a, const SignedMono& b) {
  if (b.c == 0) return {};
  SignedMono p = mono_product(a, b.bits);
  p.c *= b.c;
  return p;
}

SignedMono left_deriv_mono(int alpha, g::Bits f) {
  int s = g::left_deriv_sign(f, alpha);
  return {s, s == 0 ? 0 : (f & ~g::bit(alpha))};
}

SignedMono right_deriv_mono(g::Bits f, int alpha) {
  int s = g::right_deriv_sign(f, alpha);
  return {s, s == 0 ? 0 : (f & ~g::bit(alpha))};
}

GenKey smash_D(int i, g::Bits f, std::vector<int> r) { return GenKey{GenTag::D, i, f, std::move(r)}; }
GenKey smash_P(int alpha, g::Bits f, std::vector<int> r) { return GenKey{GenTag::P, alpha, f, std::move(r)}; }
GenKey smash_D0(g::Bits f, std::vector<int> r) { return GenKey{GenTag::D0, 0, f, std::move(r)}; }

std::string xi_string(g::Bits f) {
  if (f == 0) return "1";
  std::string out;
  for (int a = 1; a <= g::kMaxOdd; ++a) {
    if (!g::contains(f, a)) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(a);
  }
  return out;
}

std::string to_string(const GenKey& k, bool shifted) {
  std::ostringstream os;
  switch (k.tag) {
    case GenTag::D: os << (shifted ? "d" : "D") << k.index; break;
    case GenTag::P: os << (shifted ? "p" : "P") << k.index; break;
    case GenTag::D0: os << (shifted ? "d0" : "D0"); break;
  }
  os << "(" << xi_string(k.f) << ",[";
  for (std::size_t i = 1; i < k.r.size(); ++i) os << (i > 1 ? "," : "") << k.r[i];
  os << "])";
  return os.str();
}

namespace {

// Prefix-free commutator table of (A#V)_0.
SmashElement smash_base(int m, int n, const GenKey& x, const GenKey& y) {
  SmashElement out(m, n);
  detail::Sink<SmashElement> sink{out, 1};
  const auto& f = x.f;
  const auto& gg = y.f;
  const auto& r = x.r;
  const auto& s = y.r;
  const int fp = g::parity(f);
  const int gp = g::parity(gg);
  if (r.size() != s.size()) throw ContextMismatch("index vectors differ in length");
  const auto rs = add_exps(r, s);
  SignedMono fg = mono_product(f, gg);

  auto swapped = [&]() {
    SmashElement rev = smash_base(m, n, y, x);
    rev *= Scalar(-sign_pow(x.parity() * y.parity()));
    return rev;
  };

  switch (x.tag) {
    case GenTag::D: {
      const int i = x.index;
      switch (y.tag) {
        case GenTag::D: {
          const int j = y.index;
          if (fg.c != 0) {
            sink.add(s[i] * fg.c, 0, smash_D(j, fg.bits, rs));
            sink.add(-r[j] * fg.c, 0, smash_D(i, fg.bits, rs));
          }
          sink.add(-s[i], f, smash_D(j, gg, s));
          sink.add(r[j] * sign_pow(fp * gp), gg, smash_D(i, f, r));
          return out;
        }
        case GenTag::P: {
          const int a = y.index;
          if (fg.c != 0) sink.add(s[i] * fg.c, 0, smash_P(a, fg.bits, rs));
          sink.add(-s[i], f, smash_P(a, gg, s));
          SignedMono h = mono_product(left_deriv_mono(a, f), gg);
          if (h.c != 0) sink.add(-sign_pow(fp + gp) * h.c, 0, smash_D(i, h.bits, rs));
          return out;
        }
        case GenTag::D0: {
          if (fg.c != 0) sink.add(s[i] * fg.c, 0, smash_D0(fg.bits, rs));
          sink.add(-s[i], f, smash_D0(gg, s));
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
          SignedMono h1 = mono_product(f, left_deriv_mono(a, gg));
          if (h1.c != 0) sink.add(h1.c, 0, smash_P(b, h1.bits, rs));
          SignedMono h2 = mono_product(left_deriv_mono(b, f), gg);
          if (h2.c != 0) sink.add(-sign_pow(fp + 1) * h2.c, 0, smash_P(a, h2.bits, rs));
          return out;
        }
        case GenTag::D0: {
          SignedMono h = mono_product(f, left_deriv_mono(a, gg));
          if (h.c != 0) sink.add(h.c, 0, smash_D0(h.bits, rs));
          return out;
        }
      }
      break;
    }
    case GenTag::D0:
      if (y.tag == GenTag::D0) return out;
      return swapped();
  }
  return out;
}

SignedMono smash_anchor(const GenKey& x, g::Bits q) {
  if (x.tag != GenTag::P) return {};
  return mono_product(x.f, left_deriv_mono(x.index, q));
}

}  // namespace

SmashElement smash_bracket(const SmashElement& a, const SmashElement& b) {
  const int m = a.m();
  const int n = a.n();
  return detail::prefixed_bracket(
      a, b, [m, n](const GenKey& x, const GenKey& y) { return smash_base(m, n, x, y); }, smash_anchor);
}

std::string to_string(const SmashElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    if (k.prefix != 0) os << "*" << xi_string(k.prefix);
    os << "*" << to_string(k.gen, false);
  }
  return os.str();
}

}  // namespace wmn
