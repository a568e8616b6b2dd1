#include "wmn/superpoly.hpp"

#include <sstream>

#include "wmn/errors.hpp"

namespace wmn {

SuperPoly::SuperPoly(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0 || n > grassmann::kMaxOdd) throw IndexOutOfRange("invalid context dimensions");
}

SuperPoly SuperPoly::one(int m, int n) { return constant(m, n, 1); }

SuperPoly SuperPoly::constant(int m, int n, const Scalar& c) {
  return monomial(m, n, Monomial::one(m), c);
}

SuperPoly SuperPoly::monomial(int m, int n, const Monomial& mono, const Scalar& c) {
  SuperPoly p(m, n);
  p.add_term(mono, c);
  return p;
}

SuperPoly SuperPoly::t(int m, int n, int slot, int power) {
  if (slot < 0 || slot > m) throw IndexOutOfRange("t-index " + std::to_string(slot) + " out of range");
  Monomial mono = Monomial::one(m);
  mono.t[slot] = power;
  return monomial(m, n, mono);
}

SuperPoly SuperPoly::xi(int m, int n, int alpha) {
  if (alpha < 1 || alpha > n) throw IndexOutOfRange("xi-index " + std::to_string(alpha) + " out of range");
  Monomial mono = Monomial::one(m);
  mono.xi = grassmann::bit(alpha);
  return monomial(m, n, mono);
}

void SuperPoly::check_monomial(const Monomial& mono) const {
  if (static_cast<int>(mono.t.size()) != m_ + 1) throw ContextMismatch("monomial has wrong number of t-slots");
  if ((mono.xi & ~grassmann::full_mask(n_)) != 0) throw ContextMismatch("monomial uses an odd variable beyond n");
}

std::optional<int> SuperPoly::parity() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.parity();
  for (const auto& [mono, c] : terms_) {
    if (mono.parity() != p) return std::nullopt;
  }
  return p;
}

void SuperPoly::add_term(const Monomial& mono, const Scalar& c) {
  if (c == 0) return;
  check_monomial(mono);
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& other) {
  if (other.m_ != m_ || other.n_ != n_) throw ContextMismatch("adding polynomials from different contexts");
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& other) {
  if (other.m_ != m_ || other.n_ != n_) throw ContextMismatch("subtracting polynomials from different contexts");
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coef] : terms_) coef *= c;
  return *this;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) { return mul(a, b); }

SuperPoly mul(const SuperPoly& a, const SuperPoly& b) {
  if (a.m() != b.m() || a.n() != b.n()) throw ContextMismatch("multiplying polynomials from different contexts");
  SuperPoly out(a.m(), a.n());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int sign = 0;
      Monomial prod = mono_mul(ma, mb, sign);
      if (sign == 0) continue;
      out.add_term(prod, sign > 0 ? Scalar(ca * cb) : Scalar(-ca * cb));
    }
  }
  return out;
}

SuperPoly left_deriv(int alpha, const SuperPoly& f) {
  if (alpha < 1 || alpha > f.n()) throw IndexOutOfRange("odd index " + std::to_string(alpha) + " out of range");
  SuperPoly out(f.m(), f.n());
  for (const auto& [mono, c] : f.terms()) {
    int s = grassmann::left_deriv_sign(mono.xi, alpha);
    if (s == 0) continue;
    Monomial r{mono.t, mono.xi & ~grassmann::bit(alpha)};
    out.add_term(r, s > 0 ? c : Scalar(-c));
  }
  return out;
}

SuperPoly right_deriv(const SuperPoly& f, int alpha) {
  if (alpha < 1 || alpha > f.n()) throw IndexOutOfRange("odd index " + std::to_string(alpha) + " out of range");
  SuperPoly out(f.m(), f.n());
  for (const auto& [mono, c] : f.terms()) {
    int s = grassmann::right_deriv_sign(mono.xi, alpha);
    if (s == 0) continue;
    Monomial r{mono.t, mono.xi & ~grassmann::bit(alpha)};
    out.add_term(r, s > 0 ? c : Scalar(-c));
  }
  return out;
}

SuperPoly even_deriv(int i, const SuperPoly& f) {
  if (i < 0 || i > f.m()) throw IndexOutOfRange("even index " + std::to_string(i) + " out of range");
  SuperPoly out(f.m(), f.n());
  for (const auto& [mono, c] : f.terms()) {
    if (mono.t[i] != 0) out.add_term(mono, c * mono.t[i]);
  }
  return out;
}

std::string to_string(const Monomial& mono) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << '*';
    first = false;
  };
  for (std::size_t i = 0; i < mono.t.size(); ++i) {
    if (mono.t[i] == 0) continue;
    sep();
    os << 't' << i;
    if (mono.t[i] != 1) os << '^' << mono.t[i];
  }
  for (int a = 1; a <= grassmann::kMaxOdd; ++a) {
    if (grassmann::contains(mono.xi, a)) {
      sep();
      os << 'x' << a;
    }
  }
  return first ? std::string("1") : os.str();
}

std::string to_string(const SuperPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : f.terms()) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string body = to_string(mono);
    if (body == "1") {
      os << to_string(mag);
    } else if (mag == 1) {
      os << body;
    } else {
      os << to_string(mag) << '*' << body;
    }
  }
  return os.str();
}

}  // namespace wmn
